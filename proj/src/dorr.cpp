#include "clmd/dorr.hpp"

#include <algorithm>
#include <stdexcept>

namespace clmd {

namespace {

bool label_is(const PathType &p, std::initializer_list<std::string_view> labels) {
  if (p.labels.size() != labels.size()) return false;
  return std::equal(p.labels.begin(), p.labels.end(), labels.begin(),
                    [](const std::string &a, std::string_view b) { return strip_subtype(a) == b; });
}

bool any_of_paths(const PathType &p, std::initializer_list<std::initializer_list<std::string_view>> options) {
  return std::any_of(options.begin(), options.end(), [&](const auto &labels) { return label_is(p, labels); });
}

}  // namespace

std::string_view to_string(DorrType type) {
  switch (type) {
    case DorrType::ThematicFull: return "Thematic-Full";
    case DorrType::ThematicSubjToObjObl: return "Thematic nsubj→obj/obl";
    case DorrType::Promotional: return "Promotional";
    case DorrType::Demotional: return "Demotional";
    case DorrType::Structural: return "Structural";
    case DorrType::Conflational: return "Conflational";
    case DorrType::CategorialSubjObj: return "Categorial nsubj+obj";
    case DorrType::CategorialSubjIobjObl: return "Categorial nsubj+(i)obj/obl";
  }
  return "?";
}

const std::vector<DorrType> &all_dorr_types() {
  static const std::vector<DorrType> types{
      DorrType::ThematicFull, DorrType::ThematicSubjToObjObl, DorrType::Promotional,
      DorrType::Demotional,   DorrType::Structural,           DorrType::Conflational,
      DorrType::CategorialSubjObj, DorrType::CategorialSubjIobjObl};
  return types;
}

std::int64_t DorrReport::count(DorrType type) const {
  switch (type) {
    case DorrType::ThematicFull: return thematic_full;
    case DorrType::ThematicSubjToObjObl: return thematic_nsubj_to_obj_obl;
    case DorrType::Promotional: return promotional;
    case DorrType::Demotional: return demotional;
    case DorrType::Structural: return structural;
    case DorrType::Conflational: return conflational;
    case DorrType::CategorialSubjObj: return categorial_nsubj_obj;
    case DorrType::CategorialSubjIobjObl: return categorial_nsubj_iobj_obl;
  }
  throw std::invalid_argument("unknown divergence type");
}

void DorrReport::merge(const DorrReport &other) {
  thematic_full += other.thematic_full;
  thematic_nsubj_to_obj_obl += other.thematic_nsubj_to_obj_obl;
  promotional += other.promotional;
  demotional += other.demotional;
  structural += other.structural;
  conflational += other.conflational;
  categorial_nsubj_obj += other.categorial_nsubj_obj;
  categorial_nsubj_iobj_obl += other.categorial_nsubj_iobj_obl;
  sentences += other.sentences;
  per_sentence_hits.insert(per_sentence_hits.end(), other.per_sentence_hits.begin(), other.per_sentence_hits.end());
}

DorrReport detect_dorr(std::span<const Csr> csrs, const SentencePair &pair, std::size_t sentence_index,
                       const ContentPolicy &policy, bool with_direction) {
  DorrReport report;
  report.sentences = 1;

  const auto hit = [&](DorrType type, const Csr &csr) {
    DorrHit h{sentence_index, type, csr.src_endpoints, {}};
    if (csr.tgt_endpoints) h.tgt_ids = {csr.tgt_endpoints->first, csr.tgt_endpoints->second};
    report.per_sentence_hits.push_back(std::move(h));
  };

  const Csr *forward = nullptr;  // first nsubj -> obj/obl
  const Csr *inverse = nullptr;  // first obj/obl -> nsubj
  for (const auto &csr : csrs) {
    if (csr.target != TargetKind::Path) continue;
    const auto &s = csr.src_path;
    const auto &t = csr.tgt_path;
    if (with_direction && s.has_directions() && t.has_directions() &&
        s.directions.front() != t.directions.front()) {
      continue;
    }

    if (label_is(s, {"nsubj"}) && any_of_paths(t, {{"obj"}, {"obl"}})) {
      ++report.thematic_nsubj_to_obj_obl;
      hit(DorrType::ThematicSubjToObjObl, csr);
      if (forward == nullptr) forward = &csr;
    }
    if (any_of_paths(s, {{"obj"}, {"obl"}}) && label_is(t, {"nsubj"})) {
      if (inverse == nullptr) inverse = &csr;
    }
    if (label_is(s, {"advmod"}) && label_is(t, {"xcomp"})) {
      ++report.promotional;
      hit(DorrType::Promotional, csr);
    }
    if (label_is(s, {"xcomp"}) && label_is(t, {"advmod"})) {
      ++report.demotional;
      hit(DorrType::Demotional, csr);
    }
    if (label_is(s, {"obj"}) && label_is(t, {"obl"})) {
      ++report.structural;
      hit(DorrType::Structural, csr);
    }
    if (label_is(s, {"nsubj"})) {
      if (label_is(t, {"nsubj", "obj"})) {
        ++report.categorial_nsubj_obj;
        hit(DorrType::CategorialSubjObj, csr);
      }
      if (any_of_paths(t, {{"nsubj", "obj"}, {"nsubj", "iobj"}, {"nsubj", "obl"}})) {
        ++report.categorial_nsubj_iobj_obl;
        hit(DorrType::CategorialSubjIobjObl, csr);
      }
    }
  }
  if (forward != nullptr && inverse != nullptr) {
    ++report.thematic_full;
    DorrHit h{sentence_index, DorrType::ThematicFull, forward->src_endpoints, {}};
    h.tgt_ids = {forward->tgt_endpoints->first, forward->tgt_endpoints->second, inverse->tgt_endpoints->first,
                 inverse->tgt_endpoints->second};
    report.per_sentence_hits.push_back(std::move(h));
  }

  // A source root aligned to a target root together with that root's object.
  for (const auto &comp : components(content_alignment(pair, policy))) {
    if (comp.kind != ComponentKind::OneToMany) continue;
    const auto r = comp.src_ids.front();
    if (pair.src.parent(r) != kRootId) continue;
    for (const auto root : comp.tgt_ids) {
      if (pair.tgt.parent(root) != kRootId) continue;
      const bool has_obj = std::any_of(comp.tgt_ids.begin(), comp.tgt_ids.end(), [&](TokenId o) {
        return pair.tgt.parent(o) == root && strip_subtype(pair.tgt.token(o).deprel) == "obj";
      });
      if (has_obj) {
        ++report.conflational;
        report.per_sentence_hits.push_back({sentence_index, DorrType::Conflational, {r, r}, comp.tgt_ids});
        break;
      }
    }
  }
  return report;
}

DorrReport dorr_corpus(std::span<const SentencePair> corpus, const ContentPolicy &policy, const CsrOptions &options) {
  DorrReport total;
  for (std::size_t k = 0; k < corpus.size(); ++k) {
    const auto csrs = extract_csr(corpus[k], policy, options);
    total.merge(detect_dorr(csrs, corpus[k], k, policy, options.with_direction));
  }
  return total;
}

}  // namespace clmd
