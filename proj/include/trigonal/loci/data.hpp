#pragma once

// Checked-in data: the L3 equation in J2, J4, J6, J10, the branch curve G in
// i1, i2, and the special-point registry. Every file is verified against
// SHA256SUMS before it is parsed.

#include <openssl/evp.h>

#include <cstdlib>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "trigonal/arith/rational.hpp"
#include "trigonal/error.hpp"
#include "trigonal/poly/mpoly.hpp"

#ifndef TRIGONAL_DEFAULT_DATA_DIR
#define TRIGONAL_DEFAULT_DATA_DIR "data"
#endif

namespace trigonal::data {

// TRIGONAL_DATA_DIR wins over the compiled-in location.
inline std::string data_dir() {
  if (const char* env = std::getenv("TRIGONAL_DATA_DIR"); env && *env) return env;
  return TRIGONAL_DEFAULT_DATA_DIR;
}

inline std::string sha256_hex(const std::string& bytes) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), md, &len, EVP_sha256(), nullptr) != 1)
    throw Error(Errc::DataIntegrity, "SHA-256 computation failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[md[i] >> 4]);
    out.push_back(hex[md[i] & 15]);
  }
  return out;
}

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::DataIntegrity, "cannot open " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// name -> hex digest, from `sha256sum` output.
inline std::map<std::string, std::string> checksums(const std::string& dir) {
  std::map<std::string, std::string> out;
  std::istringstream in(slurp(dir + "/SHA256SUMS"));
  std::string digest, name;
  while (in >> digest >> name) {
    if (!name.empty() && name[0] == '*') name.erase(0, 1);
    out[name] = digest;
  }
  return out;
}

// Contents of a data file whose digest matches SHA256SUMS.
inline std::string read_verified(const std::string& name, const std::string& dir = data_dir()) {
  auto sums = checksums(dir);
  auto it = sums.find(name);
  if (it == sums.end()) throw Error(Errc::DataIntegrity, name + " is not listed in SHA256SUMS");
  std::string bytes = slurp(dir + "/" + name);
  if (sha256_hex(bytes) != it->second) throw Error(Errc::DataIntegrity, name + " does not match its SHA-256 digest");
  return bytes;
}

// A "vars: x, y, ..." header line, then a polynomial in canonical text over any
// number of lines.
inline MPoly<Rational> parse_mpoly_file(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  std::getline(in, header);
  const std::string tag = "vars:";
  if (header.compare(0, tag.size(), tag) != 0) throw Error(Errc::ParseError, "missing 'vars:' header");
  std::vector<std::string> names;
  std::istringstream hs(header.substr(tag.size()));
  for (std::string n; std::getline(hs, n, ',');) {
    auto b = n.find_first_not_of(" \t\r"), e = n.find_last_not_of(" \t\r");
    if (b == std::string::npos) throw Error(Errc::ParseError, "empty variable name in header");
    names.push_back(n.substr(b, e - b + 1));
  }
  std::string body, line;
  while (std::getline(in, line)) body += line + " ";
  return MPoly<Rational>::parse(body, make_vars(names));
}

// Every monomial has Σ weights[i]·exp_i = expected.
inline bool isobaric(const MPoly<Rational>& p, const std::vector<int>& weights, int expected) {
  for (const auto& [m, c] : p.terms()) {
    int w = 0;
    for (int i = 0; i < p.nvars(); ++i) w += weights[static_cast<std::size_t>(i)] * m.exp(i);
    if (w != expected) return false;
  }
  return true;
}

// The J10⁸ coefficient of the L3 equation.
inline Rational l3_leading_coefficient(const MPoly<Rational>& l3) {
  for (const auto& [m, c] : l3.terms())
    if (m.exp(0) == 0 && m.exp(1) == 0 && m.exp(2) == 0 && m.exp(3) == 8) return c;
  return Rational(0);
}

inline Rational expected_l3_leading_coefficient() {
  mpz_class c = 1, t;
  for (auto [p, e] : {std::pair{2u, 4u}, {3u, 31u}, {5u, 5u}, {19u, 10u}, {29u, 5u}}) {
    mpz_ui_pow_ui(t.get_mpz_t(), p, e);
    c *= t;
  }
  return Rational(c);
}

// The L3 equation, audited before first use: weight 80 under wt(J_d) = d and
// the expected J10⁸ coefficient.
inline const MPoly<Rational>& l3_polynomial() {
  static const MPoly<Rational> p = [] {
    MPoly<Rational> q = parse_mpoly_file(read_verified("appendix_a.mpoly"));
    if (q.nvars() != 4) throw Error(Errc::DataIntegrity, "L3 equation must be in J2, J4, J6, J10");
    if (!isobaric(q, {2, 4, 6, 10}, 80)) throw Error(Errc::DataIntegrity, "L3 equation is not isobaric of weight 80");
    if (l3_leading_coefficient(q) != expected_l3_leading_coefficient())
      throw Error(Errc::DataIntegrity, "L3 equation has the wrong J10^8 coefficient");
    return q;
  }();
  return p;
}

// G(i1, i2), the image of the ramification curve.
inline const MPoly<Rational>& branch_polynomial() {
  static const MPoly<Rational> p = [] {
    MPoly<Rational> q = parse_mpoly_file(read_verified("appendix_b.mpoly"));
    if (q.nvars() != 2) throw Error(Errc::DataIntegrity, "branch curve must be in i1, i2");
    return q;
  }();
  return p;
}

}  // namespace trigonal::data
