#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace pcover {

using VertexId = std::uint32_t;

/// Mixed-radix bijection between digit tuples and [0, n).
/// Digit 0 is the most significant.
class VertexCodec {
  public:
    explicit VertexCodec(std::vector<std::uint32_t> radices) : radices_(std::move(radices)) {
        std::uint64_t n = 1;
        for (auto r : radices_) {
            if (r == 0) throw std::invalid_argument("codec radix must be positive");
            n *= r;
            if (n > (std::uint64_t{1} << 31)) throw std::invalid_argument("codec size exceeds vertex id range");
        }
        size_ = n;
    }

    /// Uniform radix @p radix repeated @p digits times.
    static VertexCodec uniform(std::uint32_t radix, std::size_t digits) {
        return VertexCodec(std::vector<std::uint32_t>(digits, radix));
    }

    [[nodiscard]] std::uint64_t size() const noexcept { return size_; }
    [[nodiscard]] std::size_t digits() const noexcept { return radices_.size(); }
    [[nodiscard]] const std::vector<std::uint32_t>& radices() const noexcept { return radices_; }

    [[nodiscard]] VertexId encode(std::span<const std::uint32_t> digits) const {
        if (digits.size() != radices_.size()) throw std::invalid_argument("codec: wrong digit count");
        std::uint64_t id = 0;
        for (std::size_t i = 0; i < digits.size(); ++i) {
            if (digits[i] >= radices_[i]) throw std::out_of_range("codec: digit out of range");
            id = id * radices_[i] + digits[i];
        }
        return static_cast<VertexId>(id);
    }

    [[nodiscard]] std::vector<std::uint32_t> decode(VertexId id) const {
        if (id >= size_) throw std::out_of_range("codec: id out of range");
        std::vector<std::uint32_t> digits(radices_.size());
        for (std::size_t i = radices_.size(); i-- > 0;) {
            digits[i] = id % radices_[i];
            id /= radices_[i];
        }
        return digits;
    }

  private:
    std::vector<std::uint32_t> radices_;
    std::uint64_t size_ = 1;
};

} // namespace pcover
