#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "kirby4/classify.hpp"
#include "kirby4/error.hpp"
#include "kirby4/json.hpp"
#include "kirby4/kirby4.h"

struct kirby4_link {
  kirby4::FramedLink value;
};

struct kirby4_matrix {
  kirby4::SymIntMatrix value;
};

namespace {

thread_local std::string last_error;

kirby4_status fail(kirby4_status s, const char* message) {
  last_error = message;
  return s;
}

kirby4_status status_of(kirby4::ErrorCode c) {
  return static_cast<kirby4_status>(static_cast<int>(c) + 1);
}

template <class F>
kirby4_status guarded(F&& body) {
  last_error.clear();
  try {
    body();
    return KIRBY4_OK;
  } catch (const kirby4::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(KIRBY4_OUT_OF_MEMORY, "out of memory");
  } catch (const std::exception& e) {
    return fail(KIRBY4_UNEXPECTED, e.what());
  } catch (...) {
    return fail(KIRBY4_UNEXPECTED, "unknown failure");
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

kirby4::EnumerationLimits limits(uint64_t max_candidates) {
  kirby4::EnumerationLimits l;
  if (max_candidates != KIRBY4_UNLIMITED) l.max_candidates = max_candidates;
  return l;
}

#define KIRBY4_REQUIRE(...)                                                      \
  do {                                                                           \
    const void* ptrs[] = {__VA_ARGS__};                                          \
    for (const void* p : ptrs)                                                   \
      if (!p) return fail(KIRBY4_NULL_ARGUMENT, "required argument is NULL");    \
  } while (0)

}  // namespace

extern "C" {

const char* kirby4_last_error_message(void) { return last_error.c_str(); }

const char* kirby4_status_name(kirby4_status status) {
  switch (status) {
    case KIRBY4_OK: return "Ok";
    case KIRBY4_NULL_ARGUMENT: return "NullArgument";
    case KIRBY4_OUT_OF_MEMORY: return "OutOfMemory";
    case KIRBY4_UNEXPECTED: return "Unexpected";
    default: break;
  }
  if (status > KIRBY4_OK && status <= KIRBY4_RESOURCE_LIMIT)
    return kirby4::error_code_name(static_cast<kirby4::ErrorCode>(status - 1));
  return "Unknown";
}

void kirby4_string_free(char* s) { std::free(s); }

kirby4_status kirby4_link_parse(const char* text, size_t length, kirby4_link** out) {
  KIRBY4_REQUIRE(text, out);
  *out = nullptr;
  return guarded([&] { *out = new kirby4_link{kirby4::parse_framed_link(std::string_view(text, length))}; });
}

void kirby4_link_free(kirby4_link* link) { delete link; }

kirby4_status kirby4_link_to_json(const kirby4_link* link, char** out) {
  KIRBY4_REQUIRE(link, out);
  return guarded([&] { *out = copy_out(kirby4::to_json(link->value)); });
}

kirby4_status kirby4_link_mirror(const kirby4_link* link, kirby4_link** out) {
  KIRBY4_REQUIRE(link, out);
  *out = nullptr;
  return guarded([&] { *out = new kirby4_link{kirby4::mirror(link->value)}; });
}

size_t kirby4_link_component_count(const kirby4_link* link) { return link ? link->value.component_count() : 0; }
size_t kirby4_link_crossing_count(const kirby4_link* link) { return link ? link->value.crossing_count() : 0; }

kirby4_status kirby4_crossing_sign(const kirby4_link* link, size_t crossing, int* out) {
  KIRBY4_REQUIRE(link, out);
  return guarded([&] { *out = kirby4::crossing_sign(link->value, crossing); });
}

kirby4_status kirby4_linking_matrix(const kirby4_link* link, kirby4_matrix** out) {
  KIRBY4_REQUIRE(link, out);
  *out = nullptr;
  return guarded([&] { *out = new kirby4_matrix{kirby4::linking_matrix(link->value)}; });
}

kirby4_status kirby4_matrix_parse(const char* text, size_t length, kirby4_matrix** out) {
  KIRBY4_REQUIRE(text, out);
  *out = nullptr;
  return guarded([&] { *out = new kirby4_matrix{kirby4::parse_matrix(std::string_view(text, length))}; });
}

kirby4_status kirby4_matrix_from_entries(size_t n, const int64_t* row_major, kirby4_matrix** out) {
  KIRBY4_REQUIRE(out);
  *out = nullptr;
  if (n > 0 && !row_major) return fail(KIRBY4_NULL_ARGUMENT, "required argument is NULL");
  return guarded([&] {
    kirby4::IntMatrix m(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) m(i, j) = kirby4::Integer(std::to_string(row_major[i * n + j]));
    *out = new kirby4_matrix{kirby4::SymIntMatrix(std::move(m))};
  });
}

void kirby4_matrix_free(kirby4_matrix* m) { delete m; }

size_t kirby4_matrix_size(const kirby4_matrix* m) { return m ? m->value.size() : 0; }

kirby4_status kirby4_matrix_entry(const kirby4_matrix* m, size_t i, size_t j, int64_t* out) {
  KIRBY4_REQUIRE(m, out);
  return guarded([&] {
    if (i >= m->value.size() || j >= m->value.size()) {
      throw kirby4::Error(kirby4::ErrorCode::IndexOutOfRange, "matrix index out of range");
    }
    *out = kirby4::to_int64(m->value(i, j));
  });
}

kirby4_status kirby4_matrix_to_json(const kirby4_matrix* m, char** out) {
  KIRBY4_REQUIRE(m, out);
  return guarded([&] { *out = copy_out(kirby4::to_json(m->value)); });
}

kirby4_status kirby4_matrix_is_unimodular(const kirby4_matrix* m, int* out) {
  KIRBY4_REQUIRE(m, out);
  return guarded([&] { *out = kirby4::is_unimodular(m->value) ? 1 : 0; });
}

kirby4_status kirby4_classify_form(const kirby4_matrix* m, char** json) {
  KIRBY4_REQUIRE(m, json);
  return guarded([&] { *json = copy_out(kirby4::to_json(kirby4::classify(m->value))); });
}

kirby4_status kirby4_characteristic_vector(const kirby4_matrix* m, char** json) {
  KIRBY4_REQUIRE(m, json);
  return guarded([&] { *json = copy_out(kirby4::characteristic_json(kirby4::characteristic_vector(m->value))); });
}

kirby4_status kirby4_compare_forms(const kirby4_matrix* a, const kirby4_matrix* b, uint64_t max_candidates,
                                   char** json) {
  KIRBY4_REQUIRE(a, b, json);
  return guarded([&] {
    const auto r = kirby4::compare_forms(a->value, b->value, limits(max_candidates));
    *json = copy_out(kirby4::congruence_json(r, kirby4::classify(a->value), kirby4::classify(b->value)));
  });
}

kirby4_status kirby4_arf(const kirby4_link* knot, char** json) {
  KIRBY4_REQUIRE(knot, json);
  return guarded([&] { *json = copy_out(kirby4::knot_json(kirby4::KnotDiagram(knot->value))); });
}

kirby4_status kirby4_invariants(const kirby4_link* link, int smooth, char** json) {
  KIRBY4_REQUIRE(link, json);
  return guarded([&] {
    *json = copy_out(kirby4::to_json(smooth ? kirby4::smooth_invariants(link->value)
                                            : kirby4::kirby_siebenmann(link->value)));
  });
}

kirby4_status kirby4_homeomorphic(const kirby4_link* a, const kirby4_link* b, unsigned flags,
                                  uint64_t max_candidates, char** json) {
  KIRBY4_REQUIRE(a, b, json);
  return guarded([&] {
    kirby4::DecisionOptions opt;
    opt.smooth = (flags & KIRBY4_SMOOTH) != 0;
    opt.limits = limits(max_candidates);
    const kirby4::Verdict v = (flags & KIRBY4_UNORIENTED) ? kirby4::homeomorphic_unoriented(a->value, b->value, opt)
                                                          : kirby4::homeomorphic_oriented(a->value, b->value, opt);
    *json = copy_out(kirby4::to_json(v));
  });
}

}  // extern "C"
