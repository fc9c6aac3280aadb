#include "prime/digest.hpp"

#include <openssl/evp.h>

#include <array>
#include <stdexcept>

namespace prime {

namespace {
constexpr std::size_t kFlushThreshold = 1 << 16;

std::string to_hex(const unsigned char* data, std::size_t len) {
  static const char* digits = "0123456789abcdef";
  std::string out(len * 2, '0');
  for (std::size_t i = 0; i < len; ++i) {
    out[2 * i] = digits[data[i] >> 4];
    out[2 * i + 1] = digits[data[i] & 0xf];
  }
  return out;
}
}  // namespace

Sha256::Sha256() {
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  if (ctx == nullptr || EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("sha256 init failed");
  }
  ctx_ = ctx;
  buf_.reserve(kFlushThreshold);
}

Sha256::~Sha256() {
  if (ctx_ != nullptr) EVP_MD_CTX_free(static_cast<EVP_MD_CTX*>(ctx_));
}

void Sha256::flush() {
  if (buf_.empty()) return;
  EVP_DigestUpdate(static_cast<EVP_MD_CTX*>(ctx_), buf_.data(), buf_.size());
  buf_.clear();
}

void Sha256::update(std::string_view bytes) {
  // Small writes are batched; per-event hashing would otherwise dominate
  // million-step trace generation.
  buf_.append(bytes);
  if (buf_.size() >= kFlushThreshold) flush();
}

void Sha256::update_u64(std::uint64_t v) {
  char tmp[8];
  for (int i = 0; i < 8; ++i) tmp[i] = static_cast<char>((v >> (8 * i)) & 0xff);
  update(std::string_view(tmp, 8));
}

std::string Sha256::hex_digest() {
  flush();
  std::array<unsigned char, 32> md{};
  unsigned int len = 0;
  EVP_DigestFinal_ex(static_cast<EVP_MD_CTX*>(ctx_), md.data(), &len);
  return to_hex(md.data(), len);
}

std::string sha256_hex(std::string_view bytes) {
  Sha256 h;
  h.update(bytes);
  return h.hex_digest();
}

}  // namespace prime
