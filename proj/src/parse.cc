#include "qrm/parse.h"

#include <cctype>
#include <charconv>
#include <stdexcept>
#include <string>

namespace qrm {

namespace {

std::vector<std::string_view> split_ws(std::string_view text) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    std::size_t j = i;
    while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    if (j > i) out.push_back(text.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view s) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  return v;
}

std::vector<int> int_list(std::string_view s) {
  std::vector<int> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    const std::size_t comma = s.find(',', start);
    const std::size_t end = comma == std::string_view::npos ? s.size() : comma;
    out.push_back(to_int(s.substr(start, end - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::vector<Gate> parse_logical_gates(std::string_view text) {
  std::vector<Gate> out;
  for (auto tok : split_ws(text)) {
    const auto open = tok.find('(');
    if (open == std::string_view::npos || tok.back() != ')') throw std::invalid_argument("malformed gate '" + std::string(tok) + "'");
    std::string_view name = tok.substr(0, open);
    if (name == "CZ11") name = "CZ";
    const auto kind = parse_gate_name(name);
    if (!kind) throw std::invalid_argument("unknown gate '" + std::string(name) + "'");
    const auto args = int_list(tok.substr(open + 1, tok.size() - open - 2));
    if (static_cast<int>(args.size()) != gate_arity(*kind)) throw std::invalid_argument("wrong operand count in '" + std::string(tok) + "'");
    for (int a : args) {
      if (a < 1) throw std::invalid_argument("logical positions are 1-based");
    }
    out.push_back(args.size() == 1 ? Gate::one(*kind, static_cast<std::uint32_t>(args[0] - 1))
                                   : Gate::two(*kind, static_cast<std::uint32_t>(args[0] - 1), static_cast<std::uint32_t>(args[1] - 1)));
  }
  return out;
}

PhasedPauli parse_logical_pauli(std::size_t k, std::string_view text) {
  PhasedPauli p(k);
  auto toks = split_ws(text);
  if (toks.empty()) throw std::invalid_argument("empty Pauli");
  std::string_view first = toks[0];
  if (first.front() == '+' || first.front() == '-') {
    if (first.front() == '-') p.phase = 2;
    toks[0] = first.substr(1);
  }
  for (auto tok : toks) {
    if (tok.size() < 2) throw std::invalid_argument("malformed Pauli factor '" + std::string(tok) + "'");
    const int q = to_int(tok.substr(1));
    if (q < 1 || static_cast<std::size_t>(q) > k) throw std::invalid_argument("Pauli index out of range");
    PhasedPauli f = PhasedPauli::single(k, static_cast<std::size_t>(q - 1), tok[0]);
    p = p * f;
  }
  return p;
}

PairSet parse_pair_set(int m, std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  for (auto tok : split_ws(text)) {
    if (tok.size() < 5 || tok.front() != '(' || tok.back() != ')') throw std::invalid_argument("malformed pair '" + std::string(tok) + "'");
    const auto v = int_list(tok.substr(1, tok.size() - 2));
    if (v.size() != 2) throw std::invalid_argument("malformed pair '" + std::string(tok) + "'");
    pairs.emplace_back(v[0], v[1]);
  }
  return PairSet(m, std::move(pairs));
}

IndexSet parse_index_set(int m, std::string_view text) {
  if (!text.empty() && text.front() == '{' && text.back() == '}') text = text.substr(1, text.size() - 2);
  if (text.empty()) return IndexSet(m, std::vector<int>{});
  return IndexSet(m, int_list(text));
}

}  // namespace qrm
