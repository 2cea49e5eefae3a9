#include "lieord/types.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "lieord/errors.hpp"

namespace lieord {

SimpleType SimpleType::make(char letter, int rank) {
  letter = static_cast<char>(std::toupper(static_cast<unsigned char>(letter)));
  const std::string label = std::string(1, letter) + std::to_string(rank);
  switch (letter) {
    case 'A':
      if (rank < 1) throw DomainError("A_n requires n >= 1: " + label);
      return {letter, rank};
    case 'B':
    case 'C':
      if (rank < 1) throw DomainError(std::string(1, letter) + "_n requires n >= 1: " + label);
      if (rank == 1) return {'A', 1};
      return {'B', rank};
    case 'D':
      if (rank < 4) throw DomainError("D_n requires n >= 4: " + label);
      return {letter, rank};
    case 'E':
      if (rank < 6 || rank > 8) throw DomainError("E_n requires n in {6, 7, 8}: " + label);
      return {letter, rank};
    case 'F':
      if (rank != 4) throw DomainError("F_n requires n = 4: " + label);
      return {letter, rank};
    case 'G':
      if (rank != 2) throw DomainError("G_n requires n = 2: " + label);
      return {letter, rank};
    default:
      throw DomainError("unknown type letter: " + label);
  }
}

DegreeMultiset SimpleType::degrees() const {
  DegreeMultiset d;
  switch (letter_) {
    case 'A':
      for (int i = 2; i <= rank_ + 1; ++i) d.push_back(i);
      break;
    case 'B':
      for (int i = 1; i <= rank_; ++i) d.push_back(2 * i);
      break;
    case 'D':
      for (int i = 1; i <= rank_ - 1; ++i) d.push_back(2 * i);
      d.push_back(rank_);
      break;
    case 'G':
      d = {2, 6};
      break;
    case 'F':
      d = {2, 6, 8, 12};
      break;
    case 'E':
      if (rank_ == 6) d = {2, 5, 6, 8, 9, 12};
      if (rank_ == 7) d = {2, 6, 8, 10, 12, 14, 18};
      if (rank_ == 8) d = {2, 8, 12, 14, 18, 20, 24, 30};
      break;
  }
  std::sort(d.begin(), d.end());
  return d;
}

int SimpleType::coxeter_number() const { return degrees().back(); }

int SimpleType::positive_root_count() const {
  int n = 0;
  for (int d : degrees()) n += d - 1;
  return n;
}

BigInt SimpleType::weyl_order() const {
  BigInt w = 1;
  for (int d : degrees()) w *= d;
  return w;
}

std::string SimpleType::render() const { return std::string(1, letter_) + std::to_string(rank_); }

SemisimpleType::SemisimpleType(std::initializer_list<SimpleType> factors) : factors_(factors) {
  std::sort(factors_.begin(), factors_.end());
}

SemisimpleType::SemisimpleType(std::vector<SimpleType> factors) : factors_(std::move(factors)) {
  std::sort(factors_.begin(), factors_.end());
}

int SemisimpleType::rank() const {
  int r = 0;
  for (const auto& f : factors_) r += f.rank();
  return r;
}

DegreeMultiset SemisimpleType::degrees() const {
  DegreeMultiset d;
  for (const auto& f : factors_) {
    auto fd = f.degrees();
    d.insert(d.end(), fd.begin(), fd.end());
  }
  std::sort(d.begin(), d.end());
  return d;
}

int SemisimpleType::positive_root_count() const {
  int n = 0;
  for (const auto& f : factors_) n += f.positive_root_count();
  return n;
}

BigInt SemisimpleType::weyl_order() const {
  BigInt w = 1;
  for (const auto& f : factors_) w *= f.weyl_order();
  return w;
}

int SemisimpleType::max_degree() const {
  int m = 0;
  for (const auto& f : factors_) m = std::max(m, f.coxeter_number());
  return m;
}

int SemisimpleType::multiplicity(const SimpleType& t) const {
  return static_cast<int>(std::count(factors_.begin(), factors_.end(), t));
}

SemisimpleType& SemisimpleType::operator*=(const SemisimpleType& other) {
  factors_.insert(factors_.end(), other.factors_.begin(), other.factors_.end());
  std::sort(factors_.begin(), factors_.end());
  return *this;
}

bool SemisimpleType::remove_one(const SimpleType& t) {
  auto it = std::find(factors_.begin(), factors_.end(), t);
  if (it == factors_.end()) return false;
  factors_.erase(it);
  return true;
}

std::string SemisimpleType::render() const {
  std::string out;
  for (const auto& f : factors_) {
    if (!out.empty()) out += "x";
    out += f.render();
  }
  return out;
}

SemisimpleType parse_type(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s.empty()) throw ParseError("empty type expression", "");
  std::vector<SimpleType> factors;
  std::size_t pos = 0;
  while (true) {
    const std::size_t start = pos;
    std::size_t end = s.find_first_of("xX", pos);
    const std::string token = s.substr(start, end == std::string::npos ? std::string::npos : end - start);
    if (token.empty()) throw ParseError("missing factor in type expression '" + s + "'", token);
    const char letter = static_cast<char>(std::toupper(static_cast<unsigned char>(token[0])));
    if (std::string_view("ABCDEFG").find(letter) == std::string_view::npos) {
      throw ParseError("unknown type letter in '" + token + "'", token);
    }
    const std::string digits = token.substr(1);
    if (digits.empty() || digits.size() > 6 ||
        !std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw ParseError("malformed rank in '" + token + "'", token);
    }
    try {
      factors.push_back(SimpleType::make(letter, std::stoi(digits)));
    } catch (const DomainError& e) {
      throw ParseError(e.what(), token);
    }
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return SemisimpleType(std::move(factors));
}

DegreeMultiset degrees(const SimpleType& t) { return t.degrees(); }
int positive_root_count(const SemisimpleType& t) { return t.positive_root_count(); }
BigInt weyl_order(const SemisimpleType& t) { return t.weyl_order(); }

std::vector<SimpleType> simple_types_up_to(int max_rank, std::string_view letters) {
  std::vector<SimpleType> out;
  auto wanted = [&](char c) { return letters.find(c) != std::string_view::npos; };
  for (int r = 1; r <= max_rank; ++r) {
    if (wanted('A')) out.push_back(SimpleType::make('A', r));
    if (wanted('B') && r >= 2) out.push_back(SimpleType::make('B', r));
    if (wanted('D') && r >= 4) out.push_back(SimpleType::make('D', r));
    if (wanted('E') && r >= 6 && r <= 8) out.push_back(SimpleType::make('E', r));
    if (wanted('F') && r == 4) out.push_back(SimpleType::make('F', r));
    if (wanted('G') && r == 2) out.push_back(SimpleType::make('G', r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SemisimpleType> semisimple_types_up_to(int max_rank, const std::vector<SimpleType>& catalogue) {
  std::vector<SemisimpleType> out;
  std::vector<SimpleType> current;
  std::function<void(std::size_t, int)> extend = [&](std::size_t from, int budget) {
    if (!current.empty()) out.emplace_back(current);
    for (std::size_t i = from; i < catalogue.size(); ++i) {
      if (catalogue[i].rank() > budget) continue;
      current.push_back(catalogue[i]);
      extend(i, budget - catalogue[i].rank());
      current.pop_back();
    }
  };
  extend(0, max_rank);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SimpleType> types_with_coxeter_number(int h) {
  std::vector<SimpleType> out;
  if (h < 2) return out;
  out.push_back(SimpleType::make('A', h - 1));
  if (h % 2 == 0 && h / 2 >= 2) out.push_back(SimpleType::make('B', h / 2));
  if (h % 2 == 0 && h / 2 + 1 >= 4) out.push_back(SimpleType::make('D', h / 2 + 1));
  if (h == 6) out.push_back(SimpleType::make('G', 2));
  if (h == 12) {
    out.push_back(SimpleType::make('F', 4));
    out.push_back(SimpleType::make('E', 6));
  }
  if (h == 18) out.push_back(SimpleType::make('E', 7));
  if (h == 30) out.push_back(SimpleType::make('E', 8));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace lieord
