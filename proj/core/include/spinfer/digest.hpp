#ifndef SPINFER_DIGEST_HPP
#define SPINFER_DIGEST_HPP

#include <cstddef>
#include <cstdint>
#include <string>

namespace spinfer {

/// FNV-1a 64-bit running hash; reproducible fingerprint for manifests and
/// state checksums (not cryptographic).
class Fnv1a64 {
 public:
  void update(const void* data, std::size_t len) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (std::size_t k = 0; k < len; ++k) {
      hash_ ^= p[k];
      hash_ *= 1099511628211ULL;
    }
  }

  template <typename T>
  void update_value(const T& v) {
    update(&v, sizeof v);
  }

  std::uint64_t value() const { return hash_; }

  std::string hex() const {
    static const char* digits = "0123456789abcdef";
    std::string out(16, '0');
    std::uint64_t h = hash_;
    for (int k = 15; k >= 0; --k) {
      out[k] = digits[h & 0xf];
      h >>= 4;
    }
    return out;
  }

 private:
  std::uint64_t hash_ = 14695981039346656037ULL;
};

}  // namespace spinfer

#endif  // SPINFER_DIGEST_HPP
