#include "pcat/pcat.h"

#include <cstdlib>
#include <cstring>
#include <optional>
#include <string>
#include <vector>

#include "pcat/category.hpp"
#include "pcat/errors.hpp"
#include "pcat/group_words.hpp"
#include "pcat/partition.hpp"
#include "pcat/tensor_maps.hpp"

struct pcat_partition {
  pcat::Partition value;
};

struct pcat_truncation {
  pcat::CategoryTruncation value;
  mutable std::optional<std::vector<pcat::Partition>> members;
  mutable std::optional<std::vector<pcat::Partition>> sl;
};

struct pcat_oracle {
  pcat::SubgroupOracle value;
};

struct pcat_matrix {
  pcat::ExactMatrix value;
};

struct pcat_model {
  pcat::MatrixModel value;
};

namespace {

thread_local std::string last_error;

template <typename F>
pcat_status guarded(F&& f) {
  try {
    f();
    return PCAT_OK;
  } catch (const pcat::InputError& e) {
    last_error = e.what();
    return PCAT_ERR_INPUT;
  } catch (const pcat::ResourceError& e) {
    last_error = e.what();
    return PCAT_ERR_RESOURCE;
  } catch (const pcat::PreconditionError& e) {
    last_error = e.what();
    return PCAT_ERR_PRECONDITION;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return PCAT_ERR_RESOURCE;
  } catch (const std::exception& e) {
    last_error = e.what();
    return PCAT_ERR_INTERNAL;
  } catch (...) {
    last_error = "unknown error";
    return PCAT_ERR_INTERNAL;
  }
}

void require(const void* ptr, const char* what) {
  if (!ptr) throw pcat::InputError(std::string(what) + " is null");
}

char* dup(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pcat_partition* wrap(pcat::Partition p) { return new pcat_partition{std::move(p)}; }

pcat_answer answer(pcat::Membership m) {
  switch (m) {
    case pcat::Membership::no:
      return PCAT_NO;
    case pcat::Membership::yes:
      return PCAT_YES;
    case pcat::Membership::unknown:
      break;
  }
  return PCAT_UNKNOWN;
}

std::vector<pcat::Partition> unwrap_all(const pcat_partition* const* items, size_t count) {
  if (count) require(items, "generator array");
  std::vector<pcat::Partition> out;
  for (size_t i = 0; i < count; ++i) {
    require(items[i], "generator");
    out.push_back(items[i]->value);
  }
  return out;
}

}  // namespace

extern "C" {

const char* pcat_last_error(void) { return last_error.c_str(); }

void pcat_string_free(char* s) { std::free(s); }

// Partitions

pcat_status pcat_partition_parse(const char* text, pcat_partition** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = wrap(pcat::parse_text(text));
  });
}

pcat_status pcat_partition_from_labels(size_t k, size_t l, const int64_t* labels,
                                       pcat_partition** out) {
  return guarded([&] {
    if (k + l) require(labels, "labels");
    require(out, "out");
    *out = wrap(pcat::Partition::from_labels(k, l, std::span<const int64_t>(labels, k + l)));
  });
}

pcat_status pcat_partition_from_word(const char* word, pcat_partition** out) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    *out = wrap(pcat::from_word(pcat::parse_word(word)));
  });
}

pcat_status pcat_partition_named(const char* mnemonic, pcat_partition** out) {
  return guarded([&] {
    require(mnemonic, "mnemonic");
    require(out, "out");
    *out = wrap(pcat::named_partition(std::string_view(mnemonic)));
  });
}

pcat_partition* pcat_partition_clone(const pcat_partition* p) {
  return p ? new pcat_partition{p->value} : nullptr;
}

void pcat_partition_free(pcat_partition* p) { delete p; }

size_t pcat_partition_upper_count(const pcat_partition* p) {
  return p ? p->value.upper_count() : 0;
}
size_t pcat_partition_lower_count(const pcat_partition* p) {
  return p ? p->value.lower_count() : 0;
}
size_t pcat_partition_block_count(const pcat_partition* p) {
  return p ? p->value.block_count() : 0;
}

pcat_status pcat_partition_blocks(const pcat_partition* p, uint32_t* out, size_t cap) {
  return guarded([&] {
    require(p, "partition");
    if (cap < p->value.size()) throw pcat::InputError("output buffer too small");
    if (p->value.size()) require(out, "out");
    for (size_t i = 0; i < p->value.size(); ++i) out[i] = p->value.block_of(i) + 1;
  });
}

int pcat_partition_equal(const pcat_partition* a, const pcat_partition* b) {
  return a && b && a->value == b->value;
}

pcat_status pcat_partition_to_text(const pcat_partition* p, char** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "out");
    *out = dup(pcat::to_text(p->value));
  });
}

pcat_status pcat_partition_to_word(const pcat_partition* p, char** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "out");
    *out = dup(pcat::format_word(pcat::to_word(p->value)));
  });
}

pcat_status pcat_partition_group_word(const pcat_partition* p, char** out) {
  return guarded([&] {
    require(p, "partition");
    require(out, "out");
    *out = dup(pcat::format_word(pcat::word_of_partition(p->value)));
  });
}

pcat_status pcat_tensor(const pcat_partition* p, const pcat_partition* q,
                        pcat_partition** out) {
  return guarded([&] {
    require(p, "p");
    require(q, "q");
    require(out, "out");
    *out = wrap(pcat::tensor(p->value, q->value));
  });
}

pcat_status pcat_compose(const pcat_partition* p, const pcat_partition* q,
                         pcat_partition** out, size_t* loops) {
  return guarded([&] {
    require(p, "p");
    require(q, "q");
    require(out, "out");
    auto r = pcat::compose(p->value, q->value);
    if (loops) *loops = r.loops;
    *out = wrap(std::move(r.partition));
  });
}

pcat_status pcat_involute(const pcat_partition* p, pcat_partition** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = wrap(pcat::involute(p->value));
  });
}

pcat_status pcat_rotate(const pcat_partition* p, pcat_side side, pcat_direction direction,
                        pcat_partition** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = wrap(pcat::rotate(p->value,
                             side == PCAT_LEFT ? pcat::Side::left : pcat::Side::right,
                             direction == PCAT_UP ? pcat::Direction::up
                                                  : pcat::Direction::down));
  });
}

pcat_status pcat_delta(const pcat_partition* p, const size_t* upper, const size_t* lower,
                       int* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    const size_t k = p->value.upper_count();
    const size_t l = p->value.lower_count();
    if (k) require(upper, "upper indices");
    if (l) require(lower, "lower indices");
    *out = pcat::delta(p->value, std::span<const size_t>(upper, k),
                       std::span<const size_t>(lower, l));
  });
}

pcat_status pcat_connect_blocks(const pcat_partition* p, uint32_t b1, uint32_t b2,
                                pcat_partition** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    if (b1 == 0 || b2 == 0) throw pcat::InputError("block ids are 1-based");
    *out = wrap(pcat::connect_blocks(p->value, b1 - 1, b2 - 1));
  });
}

pcat_status pcat_parity_reduce(const pcat_partition* p, pcat_partition** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = wrap(pcat::parity_reduce(p->value));
  });
}

pcat_status pcat_single_leg_version(const pcat_partition* p, pcat_partition** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = wrap(pcat::single_leg_version(p->value));
  });
}

pcat_status pcat_is_single_leg(const pcat_partition* p, int* out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = pcat::is_single_leg(p->value);
  });
}

// Words

pcat_status pcat_word_reduce(const char* word, char** out) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    *out = dup(pcat::format_word(pcat::reduce_word(pcat::parse_word(word))));
  });
}

pcat_status pcat_word_multiply(const char* a, const char* b, char** out) {
  return guarded([&] {
    require(a, "a");
    require(b, "b");
    require(out, "out");
    *out = dup(pcat::format_word(pcat::multiply(pcat::parse_word(a), pcat::parse_word(b))));
  });
}

pcat_status pcat_word_inverse(const char* word, char** out) {
  return guarded([&] {
    require(word, "word");
    require(out, "out");
    *out = dup(pcat::format_word(pcat::inverse(pcat::parse_word(word))));
  });
}

// Truncations

pcat_status pcat_closure(const pcat_partition* const* generators, size_t count,
                         size_t max_points, size_t slack, uint64_t budget,
                         pcat_truncation** out) {
  return guarded([&] {
    require(out, "out");
    const auto gens = unwrap_all(generators, count);
    *out = new pcat_truncation{pcat::closure(gens, max_points, slack, budget), {}, {}};
  });
}

pcat_status pcat_truncation_load(const char* path, pcat_truncation** out) {
  return guarded([&] {
    require(path, "path");
    require(out, "out");
    *out = new pcat_truncation{pcat::CategoryTruncation::load(path), {}, {}};
  });
}

pcat_status pcat_truncation_save(const pcat_truncation* t, const char* path) {
  return guarded([&] {
    require(t, "truncation");
    require(path, "path");
    t->value.save(path);
  });
}

void pcat_truncation_free(pcat_truncation* t) { delete t; }

int pcat_truncation_saturated(const pcat_truncation* t) {
  return t && t->value.saturated();
}
size_t pcat_truncation_max_points(const pcat_truncation* t) {
  return t ? t->value.max_points() : 0;
}
size_t pcat_truncation_slack(const pcat_truncation* t) { return t ? t->value.slack() : 0; }
uint64_t pcat_truncation_steps(const pcat_truncation* t) { return t ? t->value.steps() : 0; }

pcat_status pcat_truncation_header(const pcat_truncation* t, char** out) {
  return guarded([&] {
    require(t, "truncation");
    require(out, "out");
    *out = dup(t->value.header_line());
  });
}

size_t pcat_truncation_member_count(const pcat_truncation* t) {
  return t ? t->value.member_count() : 0;
}

pcat_status pcat_truncation_member(const pcat_truncation* t, size_t index,
                                   pcat_partition** out) {
  return guarded([&] {
    require(t, "truncation");
    require(out, "out");
    if (!t->members) t->members = t->value.members();
    if (index >= t->members->size()) throw pcat::InputError("member index out of range");
    *out = wrap((*t->members)[index]);
  });
}

size_t pcat_truncation_sl_count(const pcat_truncation* t) {
  if (!t) return 0;
  if (!t->sl) t->sl = pcat::sl_subset(t->value);
  return t->sl->size();
}

pcat_status pcat_truncation_sl_member(const pcat_truncation* t, size_t index,
                                      pcat_partition** out) {
  return guarded([&] {
    require(t, "truncation");
    require(out, "out");
    if (!t->sl) t->sl = pcat::sl_subset(t->value);
    if (index >= t->sl->size()) throw pcat::InputError("index out of range");
    *out = wrap((*t->sl)[index]);
  });
}

int pcat_truncation_same_members(const pcat_truncation* a, const pcat_truncation* b) {
  return a && b && a->value.same_members(b->value);
}

pcat_status pcat_member(const pcat_truncation* t, const pcat_partition* p,
                        pcat_answer* out) {
  return guarded([&] {
    require(t, "truncation");
    require(p, "partition");
    require(out, "out");
    *out = answer(pcat::member(t->value, p->value));
  });
}

// Oracles

pcat_status pcat_oracle_new(const char* spec, pcat_oracle** out) {
  return guarded([&] {
    require(spec, "spec");
    require(out, "out");
    *out = new pcat_oracle{pcat::SubgroupOracle(pcat::parse_oracle(spec))};
  });
}

void pcat_oracle_free(pcat_oracle* o) { delete o; }

pcat_status pcat_oracle_spec(const pcat_oracle* o, char** out) {
  return guarded([&] {
    require(o, "oracle");
    require(out, "out");
    *out = dup(pcat::to_string(o->value.spec()));
  });
}

pcat_status pcat_oracle_contains_word(const pcat_oracle* o, const char* word,
                                      pcat_answer* out) {
  return guarded([&] {
    require(o, "oracle");
    require(word, "word");
    require(out, "out");
    *out = answer(o->value.contains(pcat::parse_word(word)));
  });
}

pcat_status pcat_oracle_contains_partition(const pcat_oracle* o, const pcat_partition* p,
                                           pcat_answer* out) {
  return guarded([&] {
    require(o, "oracle");
    require(p, "partition");
    require(out, "out");
    *out = answer(pcat::category_of_subgroup_member(p->value, o->value));
  });
}

pcat_status pcat_group_witness(pcat_witness_op op, const pcat_partition* p,
                               const pcat_partition* q, int64_t letter,
                               pcat_partition** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    std::optional<pcat::Partition> second;
    if (q) second = q->value;
    std::optional<pcat::BlockId> l;
    if (letter > 0) l = static_cast<pcat::BlockId>(letter - 1);
    pcat::WitnessOp kind;
    switch (op) {
      case PCAT_WITNESS_PRODUCT:
        kind = pcat::WitnessOp::product;
        break;
      case PCAT_WITNESS_INVERSE:
        kind = pcat::WitnessOp::inverse;
        break;
      case PCAT_WITNESS_CONJUGATE:
        kind = pcat::WitnessOp::conjugate;
        break;
      default:
        throw pcat::InputError("unknown witness operation");
    }
    *out = wrap(pcat::group_witness(kind, p->value, second, l));
  });
}

pcat_status pcat_bijection_test(const pcat_partition* const* generators, size_t count,
                                const pcat_oracle* oracle, size_t max_points,
                                size_t slack, uint64_t budget, size_t max_blocks,
                                pcat_bijection_report* report, char** first_disagreement) {
  return guarded([&] {
    require(oracle, "oracle");
    require(report, "report");
    const auto gens = unwrap_all(generators, count);
    const auto r =
        pcat::bijection_test(gens, oracle->value, max_points, slack, budget, max_blocks);
    report->checked = r.checked;
    report->disagreements = r.disagreements;
    report->oracle_unknown = r.oracle_unknown;
    report->saturated = r.saturated;
    if (first_disagreement)
      *first_disagreement = r.examples.empty() ? nullptr : dup(pcat::to_text(r.examples[0]));
  });
}

// Matrices and models

pcat_status pcat_tmap(const pcat_partition* p, size_t n, size_t budget, pcat_matrix** out) {
  return guarded([&] {
    require(p, "p");
    require(out, "out");
    *out = new pcat_matrix{pcat::t_map(p->value, n, budget)};
  });
}

pcat_status pcat_functoriality_check(const pcat_partition* p, const pcat_partition* q,
                                     size_t n, int* out) {
  return guarded([&] {
    require(p, "p");
    require(q, "q");
    require(out, "out");
    *out = pcat::functoriality_check(p->value, q->value, n);
  });
}

pcat_status pcat_matrix_parse(const char* text, pcat_matrix** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = new pcat_matrix{pcat::parse_matrix(text)};
  });
}

pcat_status pcat_matrix_to_text(const pcat_matrix* m, char** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = dup(pcat::to_text(m->value));
  });
}

size_t pcat_matrix_rows(const pcat_matrix* m) { return m ? m->value.rows() : 0; }
size_t pcat_matrix_cols(const pcat_matrix* m) { return m ? m->value.cols() : 0; }
void pcat_matrix_free(pcat_matrix* m) { delete m; }

pcat_status pcat_model_signed_permutation(const size_t* sigma, const int* signs, size_t n,
                                          pcat_model** out) {
  return guarded([&] {
    require(out, "out");
    if (n) {
      require(sigma, "sigma");
      require(signs, "signs");
    }
    std::vector<size_t> s(n);
    for (size_t j = 0; j < n; ++j) {
      if (sigma[j] == 0) throw pcat::InputError("sigma is 1-based");
      s[j] = sigma[j] - 1;
    }
    *out = new pcat_model{
        pcat::signed_permutation_model(s, std::span<const int>(signs, n))};
  });
}

pcat_status pcat_model_crossed(size_t order, const size_t* table, size_t identity,
                               const size_t* sigma, const size_t* g, size_t n,
                               pcat_model** out) {
  return guarded([&] {
    require(out, "out");
    require(table, "table");
    if (n) {
      require(sigma, "sigma");
      require(g, "g");
    }
    pcat::FiniteGroup group;
    group.order = order;
    group.table.assign(table, table + order * order);
    group.identity = identity;
    const auto rep = pcat::regular_representation(group);
    std::vector<std::optional<size_t>> s(n);
    for (size_t j = 0; j < n; ++j)
      if (sigma[j] != 0) s[j] = sigma[j] - 1;
    *out = new pcat_model{
        pcat::crossed_model(group, rep, s, std::span<const size_t>(g, n))};
  });
}

pcat_status pcat_model_from_matrix(const pcat_matrix* m, size_t n, pcat_model** out) {
  return guarded([&] {
    require(m, "matrix");
    require(out, "out");
    *out = new pcat_model{pcat::model_from_matrix(m->value, n)};
  });
}

void pcat_model_free(pcat_model* m) { delete m; }
size_t pcat_model_n(const pcat_model* m) { return m ? m->value.n : 0; }
size_t pcat_model_d(const pcat_model* m) { return m ? m->value.d : 0; }

pcat_status pcat_model_to_text(const pcat_model* m, char** out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    *out = dup(pcat::to_text(m->value.u));
  });
}

pcat_status pcat_intertwines(const pcat_partition* p, const pcat_model* m, size_t budget,
                             int* out) {
  return guarded([&] {
    require(p, "p");
    require(m, "model");
    require(out, "out");
    *out = pcat::intertwines(p->value, m->value, budget);
  });
}

pcat_status pcat_relations_check(const pcat_model* m, int* out) {
  return guarded([&] {
    require(m, "model");
    require(out, "out");
    *out = pcat::hyperoct_relations_check(m->value);
  });
}

pcat_status pcat_word_projection_check(const pcat_model* m, const pcat_partition* p,
                                       const size_t* rows, const size_t* cols,
                                       size_t count, int* out) {
  return guarded([&] {
    require(m, "model");
    require(p, "p");
    require(out, "out");
    if (count) {
      require(rows, "rows");
      require(cols, "cols");
    }
    pcat::Assignment a(count);
    for (size_t i = 0; i < count; ++i) {
      if (rows[i] == 0 || cols[i] == 0) throw pcat::InputError("indices are 1-based");
      a[i] = {rows[i] - 1, cols[i] - 1};
    }
    *out = pcat::word_projection_check(m->value, p->value, a);
  });
}

pcat_status pcat_word_projection_check_all(const pcat_model* m, const pcat_partition* p,
                                           int* out) {
  return guarded([&] {
    require(m, "model");
    require(p, "p");
    require(out, "out");
    *out = pcat::word_projection_check_all(m->value, p->value);
  });
}

}  // extern "C"
