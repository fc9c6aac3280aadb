#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace prime {

// Incremental SHA-256 producing lowercase hex. Content digests of traces,
// suites and configs all go through this one type.
class Sha256 {
 public:
  Sha256();
  ~Sha256();
  Sha256(const Sha256&) = delete;
  Sha256& operator=(const Sha256&) = delete;

  void update(std::string_view bytes);
  void update_u64(std::uint64_t v);

  // Finalizes and returns 64 hex chars; the object must not be reused.
  std::string hex_digest();

 private:
  void flush();

  void* ctx_;
  std::string buf_;
};

std::string sha256_hex(std::string_view bytes);

}  // namespace prime
