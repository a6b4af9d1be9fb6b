#include <memory>
#include <string>
#include <thread>

#include "doctest.h"
#include "sigma/sigma.h"

namespace {

struct SetDeleter {
  void operator()(sigma_set* s) const { sigma_set_free(s); }
};
using SetPtr = std::unique_ptr<sigma_set, SetDeleter>;

SetPtr set(const char* text) {
  sigma_set* raw = nullptr;
  REQUIRE_MESSAGE(sigma_set_parse(text, &raw) == SIGMA_OK, sigma_last_error());
  return SetPtr(raw);
}

std::string text(const sigma_set* s) {
  char* buf = nullptr;
  REQUIRE(sigma_set_format(s, &buf) == SIGMA_OK);
  std::string out = buf;
  sigma_string_free(buf);
  return out;
}

}  // namespace

TEST_CASE("set values round-trip through handles") {
  auto s = set("{2*, 1, 3, 3*}");
  CHECK(sigma_set_size(s.get()) == 2);
  CHECK(text(s.get()) == "{1, 2*}");

  sigma_set* raw = nullptr;
  REQUIRE(sigma_set_clone(s.get(), &raw) == SIGMA_OK);
  SetPtr copy(raw);
  CHECK(sigma_set_equal(s.get(), copy.get()));
  CHECK(text(set("{a} + anti({b})").get()) == "{a, b*}");
}

TEST_CASE("base operations") {
  auto x = set("{1, 2}");
  auto y = set("{1*, 2*}");
  sigma_set* raw = nullptr;

  REQUIRE(sigma_hat_intersect(x.get(), y.get(), &raw) == SIGMA_OK);
  CHECK(text(SetPtr(raw).get()) == "{1, 2}");
  REQUIRE(sigma_star_diff(x.get(), y.get(), &raw) == SIGMA_OK);
  CHECK(text(SetPtr(raw).get()) == "{}");
  REQUIRE(sigma_fuse(x.get(), y.get(), &raw) == SIGMA_OK);
  CHECK(text(SetPtr(raw).get()) == "{}");
  REQUIRE(sigma_antiset(x.get(), &raw) == SIGMA_OK);
  CHECK(sigma_set_equal(SetPtr(raw).get(), y.get()));
}

TEST_CASE("associativity and groups") {
  auto a = set("{1, 2}");
  auto b = set("{1*, 2*}");
  auto c = set("{1*}");
  sigma_set* raw = nullptr;
  REQUIRE(sigma_eval_chain(a.get(), b.get(), c.get(), &raw) == SIGMA_OK);
  CHECK(text(SetPtr(raw).get()) == "{1*}");

  int verdict = -1;
  REQUIRE(sigma_is_assoc_order(a.get(), b.get(), c.get(), &verdict) == SIGMA_OK);
  CHECK(verdict == 0);
  REQUIRE(sigma_is_locally_associative(a.get(), b.get(), a.get(), &verdict) == SIGMA_OK);
  CHECK(verdict == 0);

  auto empty = set("{}");
  const sigma_set* members[] = {empty.get()};
  REQUIRE(sigma_check_group(members, 1, &verdict) == SIGMA_OK);
  CHECK(verdict == 1);
  CHECK(sigma_check_group(members, 0, &verdict) == SIGMA_ERR_USAGE);
}

TEST_CASE("solve") {
  sigma_solve_status status;
  sigma_set* raw = nullptr;
  REQUIRE(sigma_solve(set("{α, β}").get(), set("{a*, b*, c*, α, β}").get(), &status,
                      &raw) == SIGMA_OK);
  SetPtr x(raw);
  CHECK(status == SIGMA_SOLVE_SOLVED);
  CHECK(text(x.get()) == "{a*, b*, c*}");

  REQUIRE(sigma_solve(set("{1}").get(), set("{1*}").get(), &status, &raw) == SIGMA_OK);
  SetPtr none(raw);
  CHECK(status == SIGMA_SOLVE_NO_SOLUTION);
}

TEST_CASE("error codes and messages") {
  sigma_set* raw = nullptr;
  CHECK(sigma_set_parse("{1,", &raw) == SIGMA_ERR_PARSE);
  CHECK(std::string(sigma_last_error()).find("line 1") != std::string::npos);
  CHECK(raw == nullptr);
  CHECK(sigma_set_parse("A + {1}", &raw) == SIGMA_ERR_EVALUATION);
  CHECK(sigma_set_parse(nullptr, &raw) == SIGMA_ERR_INVALID_ARGUMENT);
  CHECK(sigma_fuse(nullptr, nullptr, &raw) == SIGMA_ERR_INVALID_ARGUMENT);
  CHECK(std::string(sigma_status_name(SIGMA_ERR_CONTRACT)) == "contract-violation");

  // Errors are per thread.
  std::string other;
  std::thread([&] { other = sigma_last_error(); }).join();
  CHECK(other.empty());
}

TEST_CASE("sessions keep bindings across batches") {
  sigma_session* session = nullptr;
  REQUIRE(sigma_session_create(0, &session) == SIGMA_OK);

  sigma_batch* batch = nullptr;
  REQUIRE(sigma_session_eval(session, "A = {α, β}\nB = {a*, b*, c*, α, β}",
                             SIGMA_OUTPUT_HUMAN, &batch) == SIGMA_OK);
  CHECK(sigma_batch_count(batch) == 2);
  CHECK(std::string(sigma_batch_output(batch)).empty());
  sigma_batch_free(batch);

  REQUIRE(sigma_session_eval(session, "solve X in A + X = B", SIGMA_OUTPUT_JSON,
                             &batch) == SIGMA_OK);
  CHECK(sigma_batch_record_status(batch, 0) == SIGMA_RECORD_OK);
  CHECK(std::string(sigma_batch_output(batch)).find("\"ok\":true") != std::string::npos);
  sigma_batch_free(batch);

  sigma_set* x = nullptr;
  REQUIRE(sigma_session_lookup(session, "X", &x) == SIGMA_OK);
  CHECK(text(SetPtr(x).get()) == "{a*, b*, c*}");
  CHECK(sigma_session_lookup(session, "nope", &x) == SIGMA_ERR_EVALUATION);

  REQUIRE(sigma_session_eval(session, "A + ", SIGMA_OUTPUT_HUMAN, &batch) == SIGMA_OK);
  CHECK(sigma_batch_record_status(batch, 0) == SIGMA_RECORD_ERROR);
  CHECK(std::string(sigma_batch_diagnostics(batch)).find("error:") == 0);
  sigma_batch_free(batch);
  sigma_session_free(session);

  REQUIRE(sigma_session_create(1, &session) == SIGMA_OK);
  REQUIRE(sigma_session_eval(session, "{1,2} + {1*,2*} + {1,2}", SIGMA_OUTPUT_HUMAN,
                             &batch) == SIGMA_OK);
  CHECK(sigma_batch_record_status(batch, 0) == SIGMA_RECORD_ERROR);
  sigma_batch_free(batch);
  sigma_session_free(session);
}
