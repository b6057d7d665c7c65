#include <doctest.h>

#include <cstring>
#include <fstream>
#include <sstream>
#include <string>

#include "kirby4/kirby4.h"

namespace {

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(KIRBY4_FIXTURES) + "/" + name + ".json", std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

kirby4_link* load(const std::string& name) {
  const std::string text = slurp(name);
  kirby4_link* link = nullptr;
  REQUIRE(kirby4_link_parse(text.data(), text.size(), &link) == KIRBY4_OK);
  REQUIRE(link != nullptr);
  return link;
}

std::string take(char* s) {
  REQUIRE(s != nullptr);
  std::string out(s);
  kirby4_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("links through the C interface") {
  const char* hopf = R"({"pd":[[1,3,2,4],[3,1,4,2]],"framings":[0,0]})";
  kirby4_link* link = nullptr;
  REQUIRE(kirby4_link_parse(hopf, std::strlen(hopf), &link) == KIRBY4_OK);
  CHECK(kirby4_link_component_count(link) == 2);
  CHECK(kirby4_link_crossing_count(link) == 2);
  int sign = 0;
  CHECK(kirby4_crossing_sign(link, 0, &sign) == KIRBY4_OK);
  CHECK(sign == 1);
  CHECK(kirby4_crossing_sign(link, 2, &sign) == KIRBY4_INDEX_OUT_OF_RANGE);
  CHECK(std::string(kirby4_last_error_message()).size() > 0);

  kirby4_matrix* m = nullptr;
  REQUIRE(kirby4_linking_matrix(link, &m) == KIRBY4_OK);
  CHECK(std::string(kirby4_last_error_message()).empty());
  char* json = nullptr;
  REQUIRE(kirby4_matrix_to_json(m, &json) == KIRBY4_OK);
  CHECK(take(json) == R"({"entries":[[0,1],[1,0]],"n":2})");
  int64_t e = 0;
  CHECK(kirby4_matrix_entry(m, 0, 1, &e) == KIRBY4_OK);
  CHECK(e == 1);
  CHECK(kirby4_matrix_entry(m, 2, 0, &e) == KIRBY4_INDEX_OUT_OF_RANGE);

  kirby4_link* bar = nullptr;
  REQUIRE(kirby4_link_mirror(link, &bar) == KIRBY4_OK);
  CHECK(kirby4_crossing_sign(bar, 0, &sign) == KIRBY4_OK);
  CHECK(sign == -1);
  REQUIRE(kirby4_link_to_json(bar, &json) == KIRBY4_OK);
  const std::string text = take(json);
  kirby4_link* again = nullptr;
  REQUIRE(kirby4_link_parse(text.data(), text.size(), &again) == KIRBY4_OK);
  REQUIRE(kirby4_link_to_json(again, &json) == KIRBY4_OK);
  CHECK(take(json) == text);

  kirby4_matrix_free(m);
  kirby4_link_free(link);
  kirby4_link_free(bar);
  kirby4_link_free(again);
  kirby4_link_free(nullptr);
  kirby4_matrix_free(nullptr);
}

TEST_CASE("status codes") {
  kirby4_link* link = reinterpret_cast<kirby4_link*>(1);
  const char* bad = R"({"pd":[[1,3,2,4]],"framings":[0]})";
  CHECK(kirby4_link_parse(bad, std::strlen(bad), &link) == KIRBY4_INVALID_PD);
  CHECK(link == nullptr);
  CHECK(kirby4_link_parse("{", 1, &link) == KIRBY4_MALFORMED_INPUT);
  const char* count = R"({"pd":[],"unknots":1,"framings":[1,2]})";
  CHECK(kirby4_link_parse(count, std::strlen(count), &link) == KIRBY4_FRAMING_COUNT_MISMATCH);
  CHECK(kirby4_link_parse(nullptr, 0, &link) == KIRBY4_NULL_ARGUMENT);
  CHECK(kirby4_link_parse("{}", 2, nullptr) == KIRBY4_NULL_ARGUMENT);
  CHECK(std::string(kirby4_status_name(KIRBY4_NOT_UNIMODULAR)) == "NotUnimodular");
  CHECK(std::string(kirby4_status_name(KIRBY4_RESOURCE_LIMIT)) == "ResourceLimit");
  CHECK(std::string(kirby4_status_name(KIRBY4_OK)) == "Ok");

  kirby4_matrix* m = nullptr;
  const int64_t asym[] = {1, 2, 3, 4};
  CHECK(kirby4_matrix_from_entries(2, asym, &m) == KIRBY4_NOT_SYMMETRIC);
  const char* nonsquare = R"({"n":2,"entries":[[1,0],[0]]})";
  CHECK(kirby4_matrix_parse(nonsquare, std::strlen(nonsquare), &m) == KIRBY4_MALFORMED_INPUT);
  const int64_t two[] = {2};
  REQUIRE(kirby4_matrix_from_entries(1, two, &m) == KIRBY4_OK);
  int uni = -1;
  CHECK(kirby4_matrix_is_unimodular(m, &uni) == KIRBY4_OK);
  CHECK(uni == 0);
  char* json = nullptr;
  CHECK(kirby4_classify_form(m, &json) == KIRBY4_NOT_UNIMODULAR);
  CHECK(json == nullptr);
  kirby4_matrix_free(m);

  kirby4_link* hopf = load("hopf00");
  CHECK(kirby4_arf(hopf, &json) == KIRBY4_NOT_A_KNOT);
  kirby4_link* bad_form = load("unknot+2");
  CHECK(kirby4_homeomorphic(bad_form, hopf, 0, KIRBY4_UNLIMITED, &json) == KIRBY4_NOT_UNIMODULAR);
  CHECK(std::string(kirby4_last_error_message()).find("not unimodular") != std::string::npos);
  kirby4_link_free(hopf);
  kirby4_link_free(bad_form);
}

TEST_CASE("forms through the C interface") {
  const char* e8 =
      R"({"n":8,"entries":[[2,-1,0,0,0,0,0,0],[-1,2,-1,0,0,0,0,0],[0,-1,2,-1,0,0,0,0],[0,0,-1,2,-1,0,0,0],)"
      R"([0,0,0,-1,2,-1,0,-1],[0,0,0,0,-1,2,-1,0],[0,0,0,0,0,-1,2,0],[0,0,0,0,-1,0,0,2]]})";
  kirby4_matrix* m = nullptr;
  REQUIRE(kirby4_matrix_parse(e8, std::strlen(e8), &m) == KIRBY4_OK);
  char* json = nullptr;
  REQUIRE(kirby4_classify_form(m, &json) == KIRBY4_OK);
  CHECK(take(json) == R"({"definiteness":"positive","parity":"even","rank":8,"signature":8})");
  REQUIRE(kirby4_characteristic_vector(m, &json) == KIRBY4_OK);
  CHECK(take(json) == R"({"characteristic":[0,0,0,0,0,0,0,0],"n":8})");
  REQUIRE(kirby4_compare_forms(m, m, KIRBY4_UNLIMITED, &json) == KIRBY4_OK);
  const std::string r = take(json);
  CHECK(r.find(R"("congruent":true)") != std::string::npos);
  CHECK(r.find(R"("witness":[[)") != std::string::npos);
  CHECK(kirby4_compare_forms(m, m, 10, &json) == KIRBY4_RESOURCE_LIMIT);

  const int64_t id[] = {1, 0, 0, 0, 1, 0, 0, 0, -1};
  const int64_t h1[] = {0, 1, 0, 1, 0, 0, 0, 0, 1};
  kirby4_matrix *a = nullptr, *b = nullptr;
  REQUIRE(kirby4_matrix_from_entries(3, id, &a) == KIRBY4_OK);
  REQUIRE(kirby4_matrix_from_entries(3, h1, &b) == KIRBY4_OK);
  REQUIRE(kirby4_compare_forms(a, b, KIRBY4_UNLIMITED, &json) == KIRBY4_OK);
  CHECK(take(json).find(R"("congruent":true)") != std::string::npos);
  kirby4_matrix_free(a);
  kirby4_matrix_free(b);
  kirby4_matrix_free(m);
}

TEST_CASE("manifold decisions through the C interface") {
  kirby4_link* cp2 = load("unknot+1");
  kirby4_link* chern = load("trefoil+1");
  kirby4_link* bar = load("unknot-1");
  char* json = nullptr;
  REQUIRE(kirby4_homeomorphic(cp2, chern, 0, KIRBY4_UNLIMITED, &json) == KIRBY4_OK);
  std::string v = take(json);
  CHECK(v.find(R"("homeomorphic":false)") != std::string::npos);
  CHECK(v.find(R"("reason":"KsDiffer")") != std::string::npos);
  REQUIRE(kirby4_homeomorphic(cp2, bar, 0, KIRBY4_UNLIMITED, &json) == KIRBY4_OK);
  CHECK(take(json).find(R"("homeomorphic":false)") != std::string::npos);
  REQUIRE(kirby4_homeomorphic(cp2, bar, KIRBY4_UNORIENTED, KIRBY4_UNLIMITED, &json) == KIRBY4_OK);
  v = take(json);
  CHECK(v.find(R"("homeomorphic":true)") != std::string::npos);
  CHECK(v.find(R"("reason":"MatchAfterReversal")") != std::string::npos);
  REQUIRE(kirby4_homeomorphic(cp2, chern, KIRBY4_SMOOTH, KIRBY4_UNLIMITED, &json) == KIRBY4_OK);
  CHECK(take(json).find(R"("homeomorphic":true)") != std::string::npos);

  REQUIRE(kirby4_invariants(chern, 0, &json) == KIRBY4_OK);
  v = take(json);
  CHECK(v.find(R"("ks":1)") != std::string::npos);
  CHECK(v.find(R"("knot_determinant":3)") != std::string::npos);
  REQUIRE(kirby4_invariants(chern, 1, &json) == KIRBY4_OK);
  CHECK(take(json).find(R"("arf":null)") != std::string::npos);
  REQUIRE(kirby4_arf(chern, &json) == KIRBY4_OK);
  CHECK(take(json) == R"({"alexander":[1,-1,1],"arf":1,"crossings":3,"determinant":3})");
  kirby4_link_free(cp2);
  kirby4_link_free(chern);
  kirby4_link_free(bar);
}
