#include <gtest/gtest.h>

#include "bkn/io.hpp"
#include "bkn/iso.hpp"
#include "bkn/families.hpp"
#include "support/generators.hpp"

using namespace bkn;
using bkn::io::json;

namespace {

std::string sample(const std::string& name) { return std::string(BKN_SAMPLES_DIR) + "/" + name; }

json tuple_json(int prec, std::vector<json> entries) {
  json b = json::array();
  for (auto& e : entries) b.push_back(std::move(e));
  return json{{"prec", prec}, {"b", b}};
}

std::vector<json> zeros(int count) { return std::vector<json>(count, json::array({"0"})); }

template <class E>
std::string message_of(const json& j) {
  try {
    io::tuple_from_json(j);
  } catch (const E& e) {
    return e.what();
  }
  return "<no throw>";
}

}  // namespace

TEST(TupleJson, RoundTripsRandomTuples) {
  testkit::Rng rng(61);
  for (int i = 0; i < 30; ++i) {
    const auto t = testkit::random_tuple(rng, 6, i);
    const auto back = io::tuple_from_json(json::parse(io::tuple_to_json(t).dump()));
    EXPECT_EQ(back.prec(), 6);
    for (int k = 1; k <= kN; ++k) EXPECT_EQ(back.b(k), t.b(k));
  }
}

TEST(TupleJson, AcceptsIntegersAndDefaultsPrec) {
  auto e = zeros(10);
  e[0] = json::array({1, "1/2"});
  e[9] = json::array({-1, "-1/2"});
  json j{{"b", tuple_json(0, e)["b"]}};
  const auto t = io::tuple_from_json(j);
  EXPECT_EQ(t.prec(), kDefaultPrec);
  EXPECT_EQ(t.b(1)[1], Scalar(1, 2));
}

TEST(TupleJson, MalformedCoefficientNamesTheEntry) {
  auto e = zeros(10);
  e[2] = json::array({"0", "1/0x"});
  const auto msg = message_of<ParseError>(tuple_json(4, e));
  EXPECT_NE(msg.find("b_3[1]"), std::string::npos) << msg;
}

TEST(TupleJson, NonzeroSumReportsResidual) {
  auto e = zeros(10);
  e[4] = json::array({"0", "3"});
  const auto msg = message_of<InvalidTuple>(tuple_json(4, e));
  EXPECT_NE(msg.find("residual is 3*t"), std::string::npos) << msg;
}

TEST(TupleJson, RejectsShapeProblems) {
  EXPECT_THROW(io::tuple_from_json(tuple_json(1, zeros(10))), InvalidTuple);
  EXPECT_THROW(io::tuple_from_json(tuple_json(4, zeros(9))), ParseError);
  EXPECT_THROW(io::tuple_from_json(tuple_json(4, zeros(11))), ParseError);
  EXPECT_THROW(io::tuple_from_json(json::array()), ParseError);
  EXPECT_THROW(io::tuple_from_json(json{{"prec", "8"}, {"b", tuple_json(4, zeros(10))["b"]}}), ParseError);
  auto e = zeros(10);
  e[0] = json::array({"0", "0", "0"});
  EXPECT_THROW(io::tuple_from_json(tuple_json(2, e)), ParseError);  // more coefficients than prec
  e[0] = json::array({0.5});
  EXPECT_THROW(io::tuple_from_json(tuple_json(4, e)), ParseError);
}

TEST(TupleJson, PrecisionOverrideTruncates) {
  const auto t = io::read_tuple_file(sample("four_generic_deformed.json"));
  const auto lo = io::read_tuple_file(sample("four_generic_deformed.json"), 3);
  EXPECT_EQ(lo.prec(), 3);
  for (int k = 1; k <= kN; ++k) EXPECT_EQ(lo.b(k), t.b(k).with_prec(3));
}

TEST(Samples, ValidFilesLoadAndInvalidOnesDoNot) {
  for (const char* f : {"zero.json", "m2.json", "m_minus2.json", "m3.json", "three_135.json", "three_137.json",
                        "five_single_b3.json", "five_single_b-5.json", "five_generic.json", "gap_case.json",
                        "four_generic_deformed.json"})
    EXPECT_NO_THROW(io::read_tuple_file(sample(f))) << f;
  EXPECT_THROW(io::read_tuple_file(sample("invalid/nonzero_sum.json")), InvalidTuple);
  EXPECT_THROW(io::read_tuple_file(sample("invalid/bad_series.json")), ParseError);
  EXPECT_THROW(io::read_tuple_file(sample("does_not_exist.json")), ParseError);
}

TEST(WitnessJson, RoundTrip) {
  const auto b = Rank2Module(io::read_tuple_file(sample("m2.json")));
  const auto c = Rank2Module(io::read_tuple_file(sample("m_minus2.json")));
  const auto w = construct_witness(b, c);
  const auto back = io::witness_from_json(json::parse(io::witness_to_json(w).dump()), b.prec());
  for (int v = 0; v < kN; ++v) EXPECT_EQ(back.phi[v], w.phi[v]);
  EXPECT_TRUE(verify_witness(b, c, back).ok);
  EXPECT_THROW(io::witness_from_json(json::array(), 8), ParseError);
}

TEST(Rims, ParsesAllListFormats) {
  for (const char* text : {"[1,4,5]", "1,4,5", "1 4 5", "[ 5, 1, 4 ]"})
    EXPECT_EQ(io::parse_rim(text, 8).elements(), (std::vector<int>{1, 4, 5})) << text;
  EXPECT_THROW(io::parse_rim("1,x", 8), ParseError);
  EXPECT_THROW(io::parse_rim("1,9", 8), InvalidRim);
  EXPECT_THROW(io::parse_rim("2.5", 8), ParseError);
  EXPECT_EQ(io::rim_to_json(odd_rim()).dump(), "[1,3,5,7,9]");
}

TEST(Reports, LabelAndInvariantFields) {
  const auto m = Rank2Module(io::read_tuple_file(sample("m2.json")));
  const auto j = io::invariant_to_json(invariant(m));
  EXPECT_EQ(j["case"], "FourGeneric");
  EXPECT_EQ(j["indices"].dump(), "[1,3,5,7]");
  EXPECT_EQ(j["invariant_beta_squared"], "4");
  const auto p = io::profile_to_json(divisibility_profile(m));
  EXPECT_EQ(p["div_B"].dump(), "[false,false,false,false,true]");
}
