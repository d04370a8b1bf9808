#include "genassoc/numeric.hpp"

#include <cctype>
#include <stdexcept>

namespace genassoc {

std::string rat_str(const Rat& r) {
  Int num = rat_num(r), den = rat_den(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

bool is_integer_token(const std::string& s) {
  if (s.empty()) return false;
  size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

}  // namespace

Rat parse_rat(const std::string& raw) {
  std::string s = strip(raw);
  size_t slash = s.find('/');
  if (slash == std::string::npos) {
    if (!is_integer_token(s)) throw std::invalid_argument("bad rational: '" + raw + "'");
    return Rat(Int(s));
  }
  std::string p = strip(s.substr(0, slash)), q = strip(s.substr(slash + 1));
  if (!is_integer_token(p) || !is_integer_token(q))
    throw std::invalid_argument("bad rational: '" + raw + "'");
  Int den(q);
  if (den == 0) throw std::invalid_argument("zero denominator: '" + raw + "'");
  return Rat(Int(p), den);
}

std::string vec_str(const RootVec& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += v[i].str();
  }
  out += "]";
  return out;
}

RootVec parse_vec(const std::string& raw, int expected_len) {
  std::string s = strip(raw);
  if (s.size() < 2 || s.front() != '[' || s.back() != ']')
    throw std::invalid_argument("bad vector: '" + raw + "'");
  std::string body = s.substr(1, s.size() - 2);
  RootVec out;
  size_t pos = 0;
  while (pos <= body.size()) {
    size_t comma = body.find(',', pos);
    std::string tok = strip(body.substr(pos, comma == std::string::npos
                                                 ? std::string::npos
                                                 : comma - pos));
    if (!is_integer_token(tok)) throw std::invalid_argument("bad vector: '" + raw + "'");
    out.emplace_back(tok);
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (expected_len >= 0 && static_cast<int>(out.size()) != expected_len)
    throw std::invalid_argument("expected " + std::to_string(expected_len) +
                                " coordinates, got " + std::to_string(out.size()));
  return out;
}

std::string rat_decimal(const Rat& r, int digits) {
  Int num = rat_num(r), den = rat_den(r);
  bool neg = num < 0;
  if (neg) num = -num;
  Int scale = 1;
  for (int i = 0; i <= digits; ++i) scale *= 10;  // one extra digit to round
  Int scaled = num * scale / den;
  if (scaled % 10 >= 5) scaled += 10;
  scaled /= 10;
  Int ipart = scaled;
  for (int i = 0; i < digits; ++i) ipart /= 10;
  Int pow10 = 1;
  for (int i = 0; i < digits; ++i) pow10 *= 10;
  Int fpart = scaled - ipart * pow10;
  std::string frac = fpart.str();
  frac.insert(frac.begin(), digits - frac.size(), '0');
  std::string out = (neg && (ipart != 0 || fpart != 0)) ? "-" : "";
  out += ipart.str();
  if (digits > 0) out += "." + frac;
  return out;
}

}  // namespace genassoc
