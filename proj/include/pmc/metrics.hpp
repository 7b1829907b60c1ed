#ifndef PMC_METRICS_HPP
#define PMC_METRICS_HPP

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>

namespace pmc {

/// Counters collected during one enumeration run.
///
/// `retained_sets` is a gauge of the vertex sets currently held by the
/// enumerator (stored solution families, separator-stream stacks, loop
/// locals); `peak_retained_sets` is its high-water mark.
struct Metrics {
  std::uint64_t is_pmc_calls = 0;
  std::uint64_t separator_yields = 0;
  std::uint64_t pmc_yields = 0;
  std::uint64_t duplicates_detected = 0;
  std::size_t retained_sets = 0;
  std::size_t peak_retained_sets = 0;
  std::chrono::nanoseconds wall_time{0};
  std::chrono::nanoseconds max_delay{0};

  void retain(std::size_t count) {
    retained_sets += count;
    peak_retained_sets = std::max(peak_retained_sets, retained_sets);
  }
  void release(std::size_t count) { retained_sets -= std::min(count, retained_sets); }
};

/// Holds `count` sets on a Metrics gauge for the lifetime of the object.
class RetainedSets {
 public:
  RetainedSets(Metrics* metrics, std::size_t count) : metrics_(metrics), count_(count) {
    if (metrics_) metrics_->retain(count_);
  }
  RetainedSets(RetainedSets&& other) noexcept : metrics_(other.metrics_), count_(other.count_) {
    other.count_ = 0;
  }
  RetainedSets& operator=(RetainedSets&& other) noexcept {
    if (this != &other) {
      if (metrics_) metrics_->release(count_);
      metrics_ = other.metrics_;
      count_ = other.count_;
      other.count_ = 0;
    }
    return *this;
  }
  ~RetainedSets() {
    if (metrics_) metrics_->release(count_);
  }

  void resize(std::size_t count) {
    if (!metrics_) {
      count_ = count;
      return;
    }
    if (count > count_) metrics_->retain(count - count_);
    else metrics_->release(count_ - count);
    count_ = count;
  }

 private:
  Metrics* metrics_;
  std::size_t count_;
};

}  // namespace pmc

#endif  // PMC_METRICS_HPP
