// src/triphone.cpp
#include "fonorico/triphone.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "fonorico/util.h"

namespace fonorico {

namespace {

constexpr std::array<std::string_view, kCategoryCount> kCategoryNames = {
    "VVV", "VVC", "VCV", "VCC", "CVV", "CVC", "CCV", "CCC"};

TriphoneCategory categorize_classes(MajorClass c1, MajorClass c2,
                                    MajorClass c3) {
  auto bit = [](MajorClass c) {
    return c == MajorClass::kContoid ? 1u : 0u;
  };
  return static_cast<TriphoneCategory>((bit(c1) << 2) | (bit(c2) << 1) |
                                       bit(c3));
}

}  // namespace

std::string_view category_name(TriphoneCategory c) {
  return kCategoryNames[static_cast<std::size_t>(c)];
}

TriphoneCategory category_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kCategoryCount; ++i) {
    if (kCategoryNames[i] == name) return static_cast<TriphoneCategory>(i);
  }
  throw ConfigError("unknown triphone category '" + std::string(name) + "'");
}

TriphoneCategory categorize(const Triphone& t, const PhonemeInventory& inv) {
  return categorize_classes(inv.classify(t.p1), inv.classify(t.p2),
                            inv.classify(t.p3));
}

std::vector<Triphone> extract(std::span<const PhonemeId> phonemes) {
  std::vector<Triphone> out;
  if (phonemes.size() < 3) return out;
  out.reserve(phonemes.size() - 2);
  for (std::size_t i = 0; i + 2 < phonemes.size(); ++i) {
    out.push_back(Triphone{phonemes[i], phonemes[i + 1], phonemes[i + 2]});
  }
  return out;
}

TriphoneInventory::TriphoneInventory(const PhonemeInventory& inv)
    : inv_(&inv) {
  class_by_id_.reserve(inv.size());
  for (std::size_t i = 0; i < inv.size(); ++i) {
    class_by_id_.push_back(inv.classify(static_cast<PhonemeId>(i)));
  }
}

TriphoneCategory TriphoneInventory::categorize(const Triphone& t) const {
  return categorize_classes(class_by_id_[t.p1], class_by_id_[t.p2],
                            class_by_id_[t.p3]);
}

NewContribution TriphoneInventory::add(std::span<const Triphone> triphones) {
  NewContribution contribution;
  // Duplicate new triphones within the batch count once toward the
  // contribution but fully toward totals; counts update in place, so
  // the second occurrence already sees a nonzero count.
  for (const Triphone& t : triphones) {
    std::size_t cat = static_cast<std::size_t>(categorize(t));
    auto [it, inserted] = counts_.emplace(t.key(), 0);
    if (it->second == 0) {
      ++contribution.by_category[cat];
      ++per_category_[cat].distinct;
    }
    ++it->second;
    ++per_category_[cat].total;
    ++total_;
  }
  return contribution;
}

std::uint64_t TriphoneInventory::count(const Triphone& t) const {
  auto it = counts_.find(t.key());
  return it == counts_.end() ? 0 : it->second;
}

TriphoneInventory TriphoneInventory::merge(const TriphoneInventory& a,
                                           const TriphoneInventory& b) {
  if (!(*a.inv_ == *b.inv_)) {
    throw ConfigError("cannot merge triphone inventories over different "
                      "phoneme inventories");
  }
  TriphoneInventory out(*a.inv_);
  out.counts_ = a.counts_;
  out.per_category_ = a.per_category_;
  out.total_ = a.total_;
  for (const auto& [key, count] : b.counts_) {
    std::size_t cat = static_cast<std::size_t>(
        out.categorize(Triphone::from_key(key)));
    auto [it, inserted] = out.counts_.emplace(key, 0);
    if (it->second == 0) ++out.per_category_[cat].distinct;
    it->second += count;
    out.per_category_[cat].total += count;
    out.total_ += count;
  }
  return out;
}

void TriphoneInventory::save(std::ostream& out) const {
  struct Row {
    std::string p1, p2, p3;
    TriphoneCategory cat;
    std::uint64_t count;
  };
  std::vector<Row> rows;
  rows.reserve(counts_.size());
  for (const auto& [key, count] : counts_) {
    Triphone t = Triphone::from_key(key);
    rows.push_back(Row{inv_->symbol_of(t.p1), inv_->symbol_of(t.p2),
                       inv_->symbol_of(t.p3), categorize(t), count});
  }
  std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.p1 != b.p1) return a.p1 < b.p1;
    if (a.p2 != b.p2) return a.p2 < b.p2;
    return a.p3 < b.p3;
  });
  for (const Row& r : rows) {
    out << r.p1 << '\t' << r.p2 << '\t' << r.p3 << '\t'
        << category_name(r.cat) << '\t' << r.count << '\n';
  }
}

TriphoneInventory TriphoneInventory::load(std::istream& in,
                                          const PhonemeInventory& inv) {
  TriphoneInventory out(inv);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    auto cols = split(body, '\t');
    if (cols.size() != 5) {
      throw SchemaError("triphone dump: expected 5 columns", line_no);
    }
    std::string context = "in triphone dump line " + std::to_string(line_no);
    Triphone t{inv.id_of(trim(cols[0]), context),
               inv.id_of(trim(cols[1]), context),
               inv.id_of(trim(cols[2]), context)};
    std::uint64_t count = 0;
    try {
      count = std::stoull(std::string(trim(cols[4])));
    } catch (const std::exception&) {
      throw SchemaError("triphone dump: bad count", line_no);
    }
    TriphoneCategory declared = category_from_name(trim(cols[3]));
    if (declared != out.categorize(t)) {
      throw SchemaError("triphone dump: category does not match symbols",
                        line_no);
    }
    std::size_t cat = static_cast<std::size_t>(declared);
    auto [it, inserted] = out.counts_.emplace(t.key(), 0);
    if (!inserted) {
      throw SchemaError("triphone dump: duplicate triphone", line_no);
    }
    it->second = count;
    ++out.per_category_[cat].distinct;
    out.per_category_[cat].total += count;
    out.total_ += count;
  }
  return out;
}

}  // namespace fonorico
