#ifndef PMC_GENERATOR_HPP
#define PMC_GENERATOR_HPP

#include <coroutine>
#include <exception>
#include <optional>
#include <utility>

namespace pmc {

/// Minimal pull-style coroutine generator: `next()` resumes the body until
/// the following `co_yield` and returns the yielded value, or nullopt when
/// the body finishes. Exceptions thrown in the body propagate out of `next()`.
template <typename T>
class Generator {
 public:
  struct promise_type {
    std::optional<T> value;
    std::exception_ptr error;

    Generator get_return_object() { return Generator(Handle::from_promise(*this)); }
    std::suspend_always initial_suspend() noexcept { return {}; }
    std::suspend_always final_suspend() noexcept { return {}; }
    std::suspend_always yield_value(T v) {
      value = std::move(v);
      return {};
    }
    void return_void() {}
    void unhandled_exception() { error = std::current_exception(); }
  };

  using Handle = std::coroutine_handle<promise_type>;

  Generator() = default;
  Generator(Generator&& other) noexcept : handle_(std::exchange(other.handle_, {})) {}
  Generator& operator=(Generator&& other) noexcept {
    if (this != &other) {
      reset();
      handle_ = std::exchange(other.handle_, {});
    }
    return *this;
  }
  Generator(const Generator&) = delete;
  Generator& operator=(const Generator&) = delete;
  ~Generator() { reset(); }

  bool active() const { return handle_ && !handle_.done(); }

  std::optional<T> next() {
    if (!active()) return std::nullopt;
    handle_.promise().value.reset();
    handle_.resume();
    if (handle_.promise().error) std::rethrow_exception(std::exchange(handle_.promise().error, {}));
    if (handle_.done()) return std::nullopt;
    return std::move(handle_.promise().value);
  }

  void reset() {
    if (handle_) handle_.destroy();
    handle_ = {};
  }

 private:
  explicit Generator(Handle h) : handle_(h) {}
  Handle handle_{};
};

}  // namespace pmc

#endif  // PMC_GENERATOR_HPP
