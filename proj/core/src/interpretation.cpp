#include "mtlog/interpretation.hpp"

#include <algorithm>
#include <vector>

#include "mtlog/errors.hpp"
#include "mtlog/parser.hpp"

namespace mtlog {

std::string to_string(Truth3 v) {
  switch (v) {
    case Truth3::False: return "false";
    case Truth3::Undef: return "undef";
    default: return "true";
  }
}

const IntervalSet& Interpretation::get(const GroundAtom& atom) const {
  static const IntervalSet kEmpty;
  auto it = extents_.find(atom);
  return it == extents_.end() ? kEmpty : it->second;
}

void Interpretation::set(GroundAtom atom, IntervalSet extent) {
  if (extent.empty()) {
    extents_.erase(atom);
  } else {
    extents_[std::move(atom)] = std::move(extent);
  }
}

void Interpretation::add(const GroundAtom& atom, const IntervalSet& extent) {
  if (extent.empty()) return;
  auto it = extents_.find(atom);
  if (it == extents_.end()) {
    extents_.emplace(atom, extent);
  } else {
    it->second = set_union(it->second, extent);
  }
}

std::string Interpretation::dump() const {
  std::vector<std::string> lines;
  lines.reserve(extents_.size());
  for (const auto& [atom, extent] : extents_) {
    lines.push_back(atom.to_string() + "@" + extent.to_string());
  }
  std::sort(lines.begin(), lines.end());
  std::string out;
  for (const std::string& line : lines) {
    out += line;
    out += "\n";
  }
  return out;
}

std::optional<TimePoint> Interpretation::min_finite_endpoint() const {
  std::optional<TimePoint> out;
  for (const auto& [atom, extent] : extents_) {
    if (auto m = extent.min_finite_endpoint(); m && (!out || *m < *out)) out = m;
  }
  return out;
}

std::optional<TimePoint> Interpretation::max_finite_endpoint() const {
  std::optional<TimePoint> out;
  for (const auto& [atom, extent] : extents_) {
    if (auto m = extent.max_finite_endpoint(); m && (!out || *m > *out)) out = m;
  }
  return out;
}

Interpretation interp_union(const Interpretation& a, const Interpretation& b) {
  Interpretation out = a;
  for (const auto& [atom, extent] : b.extents()) out.add(atom, extent);
  return out;
}

Interpretation interp_intersect(const Interpretation& a, const Interpretation& b) {
  Interpretation out;
  for (const auto& [atom, extent] : a.extents()) {
    out.set(atom, set_intersect(extent, b.get(atom)));
  }
  return out;
}

bool interp_subset(const Interpretation& a, const Interpretation& b) {
  for (const auto& [atom, extent] : a.extents()) {
    if (!is_subset(extent, b.get(atom))) return false;
  }
  return true;
}

std::string ThreeValuedInterpretation::dump() const {
  std::string out = "# true\n";
  out += lo.dump();
  out += "# undef\n";
  Interpretation undef;
  for (const auto& [atom, extent] : hi.extents()) {
    undef.set(atom, set_difference(extent, lo.get(atom)));
  }
  out += undef.dump();
  return out;
}

ThreeValuedInterpretation exact_pair(Interpretation i) {
  ThreeValuedInterpretation out;
  out.hi = i;
  out.lo = std::move(i);
  return out;
}

Interpretation interpretation_from_dataset(const Dataset& d) {
  Interpretation out;
  for (const Fact& f : d.facts) out.add(f.atom, IntervalSet(f.interval));
  return out;
}

Interpretation parse_interpretation(std::string_view text) {
  return interpretation_from_dataset(parse_dataset(text));
}

ThreeValuedInterpretation parse_three_valued_dump(std::string_view text) {
  std::string true_block;
  std::string undef_block;
  std::string* current = nullptr;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end == std::string_view::npos ? std::string_view::npos : end - start);
    if (line == "# true") {
      current = &true_block;
    } else if (line == "# undef") {
      current = &undef_block;
    } else if (!line.empty()) {
      if (current == nullptr) throw SyntaxError("expected '# true' or '# undef' header");
      current->append(line);
      current->push_back('\n');
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  ThreeValuedInterpretation out;
  out.lo = parse_interpretation(true_block);
  out.hi = interp_union(out.lo, parse_interpretation(undef_block));
  return out;
}

}  // namespace mtlog
