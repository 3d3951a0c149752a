#pragma once

#include <array>
#include <atomic>
#include <cstddef>
#include <functional>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace shiftlab {

/// Append-only memo of a sequence f(0), f(1), ... computed by a stateful
/// extender. Storage is chunked so published entries never move; readers
/// below the published size need no lock.
template <class T>
class ChunkedMemo {
 public:
  static constexpr std::size_t kChunkBits = 16;
  static constexpr std::size_t kChunkSize = std::size_t{1} << kChunkBits;
  static constexpr std::size_t kMaxChunks = 1024;  // 2^26 entries
  static constexpr std::size_t kCapacity = kChunkSize * kMaxChunks;

  /// `extend(i, memo)` must return entry i given entries [0, i) already stored.
  using Extender = std::function<T(std::size_t, const ChunkedMemo&)>;

  explicit ChunkedMemo(Extender extend) : extend_(std::move(extend)) {}

  ChunkedMemo(const ChunkedMemo&) = delete;
  ChunkedMemo& operator=(const ChunkedMemo&) = delete;

  std::size_t size() const { return size_.load(std::memory_order_acquire); }

  /// Entry i; extends the memo if needed.
  const T& at(std::size_t i) const {
    if (i >= size()) ensure(i + 1);
    return chunks_[i >> kChunkBits][i & (kChunkSize - 1)];
  }

  /// Entry i without bounds check; valid only below size().
  const T& raw(std::size_t i) const { return chunks_[i >> kChunkBits][i & (kChunkSize - 1)]; }

  void ensure(std::size_t n) const {
    if (n <= size()) return;
    if (n > kCapacity) throw std::length_error("sequence cache capacity exceeded");
    std::lock_guard lock(mutex_);
    std::size_t cur = size_.load(std::memory_order_relaxed);
    while (cur < n) {
      const std::size_t c = cur >> kChunkBits;
      if (!chunks_[c]) chunks_[c] = std::make_unique<T[]>(kChunkSize);
      chunks_[c][cur & (kChunkSize - 1)] = extend_(cur, *this);
      ++cur;
      // publish per element so the extender can read earlier entries via raw()
      size_.store(cur, std::memory_order_release);
    }
  }

 private:
  Extender extend_;
  mutable std::array<std::unique_ptr<T[]>, kMaxChunks> chunks_{};
  mutable std::atomic<std::size_t> size_{0};
  mutable std::mutex mutex_;
};

}  // namespace shiftlab
