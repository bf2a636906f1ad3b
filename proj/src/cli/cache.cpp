#include <openssl/evp.h>

#include <fstream>
#include <sstream>

#include "mt/cli/pipeline.hpp"
#include "mt/error.hpp"

namespace mt {

namespace {
constexpr std::string_view kMagic = "MTCACHE1";
}

std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::InvariantViolation, "SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

std::filesystem::path Cache::entry_path(const std::string& key) const { return dir_ / (sha256_hex(key) + ".mtc"); }

// Layout: magic line, payload hash line, payload.
std::optional<std::string> Cache::get(const std::string& key) const {
  std::ifstream in(entry_path(key), std::ios::binary);
  if (!in) return std::nullopt;
  std::string magic, hash;
  std::getline(in, magic);
  std::getline(in, hash);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string payload = ss.str();
  if (magic != kMagic || hash != sha256_hex(payload))
    throw Error(ErrorKind::CorruptCache, "cache entry " + entry_path(key).string() + " fails its hash");
  return payload;
}

void Cache::put(const std::string& key, const std::string& payload) const {
  auto path = entry_path(key);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << kMagic << '\n' << sha256_hex(payload) << '\n' << payload;
    if (!out) throw Error(ErrorKind::InvalidArgument, "cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace mt
