#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <fstream>
#include <sstream>

#include "pascalgamma/oeis.hpp"

namespace pascalgamma {

namespace {

class CacheLock {
 public:
  explicit CacheLock(const std::filesystem::path& dir) {
    const auto path = dir / ".lock";
    fd_ = ::open(path.c_str(), O_CREAT | O_RDWR, 0644);
    if (fd_ < 0 || ::flock(fd_, LOCK_EX) != 0) {
      if (fd_ >= 0) ::close(fd_);
      throw NetworkError("cannot lock OEIS cache at " + path.string());
    }
  }
  ~CacheLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  CacheLock(const CacheLock&) = delete;
  CacheLock& operator=(const CacheLock&) = delete;

 private:
  int fd_ = -1;
};

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

OeisFixture fetch_fixture(std::string_view anum, const std::filesystem::path& cache_root,
                          std::string_view base_url) {
  if (!is_valid_anum(anum)) throw ParseError("malformed A-number '" + std::string(anum) + "'");
  const std::string file_name = "b" + std::string(anum.substr(1)) + ".txt";

  std::error_code ec;
  std::filesystem::create_directories(cache_root, ec);
  if (ec) throw NetworkError("cannot create OEIS cache " + cache_root.string());
  CacheLock lock(cache_root);

  const auto cached = cache_root / file_name;
  if (std::filesystem::exists(cached)) {
    return parse_bfile(read_file(cached), std::string(anum), FixtureSource::Fetched);
  }

  httplib::Client client{std::string(base_url)};
  client.set_connection_timeout(10, 0);
  client.set_read_timeout(30, 0);
  client.set_follow_location(true);
  const std::string path = "/" + std::string(anum) + "/" + file_name;
  auto res = client.Get(path);
  if (!res) {
    throw NetworkError("fetching " + std::string(base_url) + path + " failed: " +
                       httplib::to_string(res.error()));
  }
  if (res->status != 200) {
    throw NetworkError("fetching " + std::string(base_url) + path + " returned HTTP " +
                       std::to_string(res->status));
  }
  OeisFixture fx;
  try {
    fx = parse_bfile(res->body, std::string(anum), FixtureSource::Fetched);
  } catch (const ParseError& e) {
    throw NetworkError("fetched " + std::string(base_url) + path + " is not a b-file: " + e.what());
  }

  const auto tmp = cached.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary);
    out << res->body;
  }
  std::filesystem::rename(tmp, cached, ec);
  return fx;
}

}  // namespace pascalgamma
