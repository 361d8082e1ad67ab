#include "spec_parse.hpp"

#include "linset/error.hpp"
#include "linset/scattered.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace linset::app {

namespace {

[[noreturn]] void fail(std::string_view what) { throw Error(Errc::InvalidArgument, std::string(what)); }

std::uint64_t to_uint(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) fail("not a non-negative integer: '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

Felt element(const FieldCtx& F, std::string_view s) {
  const auto idx = to_uint(s);
  if (idx >= F.order()) fail("field index out of range: " + std::string(s));
  return F.from_index(idx);
}

template <class Pred>
Felt first_element(const FieldCtx& F, Pred pred, std::string_view what) {
  for (std::uint64_t i = 1; i < F.order(); ++i) {
    const Felt x = F.element_at(i);
    if (pred(x)) return x;
  }
  throw Error(Errc::BadParams, std::string("no element satisfies ") + std::string(what));
}

PolyTarget family_target(const FieldCtx& F, std::string label, const KnownFamily& fam) {
  return {std::move(label), known_family(F, fam), fam};
}

}  // namespace

std::vector<unsigned> parse_uint_list(std::string_view text) {
  std::vector<unsigned> out;
  for (auto part : split(text, ',')) out.push_back(static_cast<unsigned>(to_uint(part)));
  return out;
}

FieldSpec parse_field_triple(std::string_view text) {
  const auto v = parse_uint_list(text);
  if (v.size() != 3) fail("expected p,e,t");
  FieldSpec s;
  s.p = v[0];
  s.e = v[1];
  s.t = v[2];
  return s;
}

std::vector<PolyTarget> parse_poly(const FieldCtx& F, std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view head = text.substr(0, colon);
  const std::string_view args = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  const std::string label(text);

  if (head == "psi") {
    const auto k = static_cast<unsigned>(to_uint(args));
    return {{label, build_psi(F, k).poly, std::nullopt}};
  }
  if (head == "u1") {
    return {family_target(F, label, {Family::U1, static_cast<unsigned>(to_uint(args)), {}, {}})};
  }
  if (head == "u2" || head == "u3") {
    const Family tag = head == "u2" ? Family::U2 : Family::U3;
    const auto parts = split(args, ',');
    if (parts.size() != 2) fail(std::string(head) + " expects s,delta");
    const auto s = static_cast<unsigned>(to_uint(parts[0]));
    if (parts[1] == "all") {
      std::vector<PolyTarget> out;
      for (Felt d : delta_sweep(F, tag)) {
        const std::string l = std::string(head) + ":" + std::to_string(s) + "," + std::to_string(F.to_index(d));
        out.push_back(family_target(F, l, {tag, s, d, {}}));
      }
      return out;
    }
    return {family_target(F, label, {tag, s, element(F, parts[1]), {}})};
  }
  if (head == "u4") {
    const Felt d = args.empty() ? first_element(F, [&](Felt x) { return F.add(F.mul(x, x), x) == F.one(); },
                                                "delta^2 + delta = 1")
                                : element(F, args);
    return {family_target(F, "u4:" + std::to_string(F.to_index(d)), {Family::U4, 1, d, {}})};
  }
  if (head == "u5") {
    if (F.n() != 6) throw Error(Errc::BadParams, "U5: n must be 6");
    const Felt h = args.empty() ? first_element(F, [&](Felt x) { return F.mul(F.frob(x, 3), x) == F.neg(F.one()); },
                                                "h^{q^3+1} = -1")
                                : element(F, args);
    return {family_target(F, "u5:" + std::to_string(F.to_index(h)), {Family::U5, 1, {}, h})};
  }
  if (head == "poly") {
    std::string_view body = args;
    if (body.size() < 2 || body.front() != '[' || body.back() != ']') fail("poly expects [c0,...,c_{n-1}]");
    body = body.substr(1, body.size() - 2);
    const auto parts = split(body, ',');
    if (parts.size() != F.n()) fail("poly needs exactly n coefficients");
    std::vector<Felt> c;
    for (auto part : parts) c.push_back(element(F, part));
    return {{label, LinPoly(F, std::move(c)), std::nullopt}};
  }
  fail("unknown polynomial descriptor: " + label);
}

std::vector<std::uint32_t> read_modulus_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot read modulus file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  for (char& ch : text) {
    if (ch == ',' || ch == '\n' || ch == '\t' || ch == '\r') ch = ' ';
  }
  std::vector<std::uint32_t> out;
  std::istringstream words(text);
  std::string w;
  while (words >> w) out.push_back(static_cast<std::uint32_t>(to_uint(w)));
  if (out.empty()) fail("empty modulus file");
  return out;
}

}  // namespace linset::app
