#include <map>
#include <memory>

#include "qseries/engine.hpp"
#include "qseries/error.hpp"

namespace qseries::engine {

namespace {

constexpr int kCertificateTrials = 8;
constexpr std::uint64_t kCertificateSeed = 0x48;
constexpr double kCertificateTol = 1e-20;

Dims local_dims(const Dims& dims, const std::string& prefix, const QBinomialBlock& block) {
  Dims out;
  for (const auto& name : block.dim_names) out[name] = dims.at(prefix + name);
  return out;
}

void add_block_schema(Identity& id, const QBinomialBlock& block, const std::string& prefix) {
  for (const auto& name : block.dim_names) id.dim_names.push_back(prefix + name);
  for (auto spec : block.schema) {
    spec.name = prefix + spec.name;
    if (!spec.dim.empty()) spec.dim = prefix + spec.dim;
    id.schema.push_back(std::move(spec));
  }
  id.schema.push_back(make_param(prefix + "z", ParamKind::argument, "", block.argument_min, block.argument_max));
  for (const auto& c : block.constraints) {
    id.constraints.push_back({prefix + c.label, [m = c.modulus, prefix](const ParameterSet& P, const BaseSystem&) {
                                return m(BlockParams(P, prefix), P.scalar(prefix + "z"));
                              }});
  }
}

struct Piece {
  std::size_t offset, size;
  IndexView of(IndexView k) const { return k.subspan(offset, size); }
};

/// Left side: sum over k_1..k_p (and the base block's remaining sum) of
/// prod S_r(z_r, k_r) P_base(w step) / P_base(w) [R_base(w step, j)], with
/// step = prod_r (q^{t h_r})^{|k_r|}.
struct LeftTerm {
  struct Shift {
    QComplex ratio;
    TermFn rest;
  };
  std::vector<TermFn> summands;
  std::vector<Piece> pieces;
  Piece rest_piece{0, 0};
  std::vector<QComplex> steps;
  QBinomialBlock base;
  BlockParams base_view;
  QComplex qt, w, base_product;
  std::map<std::vector<long>, Shift> shifts;

  QComplex operator()(IndexView kk) {
    std::vector<long> weights;
    QComplex t(1L);
    for (std::size_t r = 0; r < summands.size(); ++r) {
      IndexView k = pieces[r].of(kk);
      t *= summands[r](k);
      weights.push_back(weight(k));
    }
    auto it = shifts.find(weights);
    if (it == shifts.end()) {
      QComplex step(1L);
      for (std::size_t r = 0; r < steps.size(); ++r) step *= ipow(steps[r], weights[r]);
      const QComplex shifted = w * step;
      Shift s{checked_div(base.product(base_view, qt, shifted), base_product), {}};
      if (base.is_transformation()) s.rest = base.rest(base_view, qt, shifted);
      it = shifts.emplace(std::move(weights), std::move(s)).first;
    }
    t *= it->second.ratio;
    if (it->second.rest) t *= it->second.rest(rest_piece.of(kk));
    return t;
  }
};

/// Right side: sum over j (and the remaining sums of transformation blocks)
/// of S_base(w, j) prod_r P_r(z_r s_r^{|j|}) / P_r(z_r) [R_r(z_r s_r^{|j|}, j_r)].
struct RightTerm {
  struct Shift {
    QComplex ratio;
    std::vector<TermFn> rests;
  };
  TermFn base_summand;
  Piece base_piece{0, 0};
  std::vector<QBinomialBlock> blocks;
  std::vector<BlockParams> views;
  std::vector<QComplex> bases, steps, z, products;
  std::vector<Piece> rest_pieces;  // per block; size 0 when plain
  std::map<long, Shift> shifts;

  QComplex operator()(IndexView jj) {
    IndexView j = base_piece.of(jj);
    const long J = weight(j);
    auto it = shifts.find(J);
    if (it == shifts.end()) {
      Shift s{QComplex(1L), {}};
      for (std::size_t r = 0; r < blocks.size(); ++r) {
        const QComplex shifted = z[r] * ipow(steps[r], J);
        s.ratio *= checked_div(blocks[r].product(views[r], bases[r], shifted), products[r]);
        s.rests.push_back(blocks[r].is_transformation() ? blocks[r].rest(views[r], bases[r], shifted) : TermFn());
      }
      it = shifts.emplace(J, std::move(s)).first;
    }
    QComplex t = base_summand(j) * it->second.ratio;
    for (std::size_t r = 0; r < blocks.size(); ++r) {
      if (it->second.rests[r]) t *= it->second.rests[r](rest_pieces[r].of(jj));
    }
    return t;
  }
};

template <typename F>
TermFn wrap(F f) {
  auto state = std::make_shared<F>(std::move(f));
  return [state](IndexView k) { return (*state)(k); };
}

std::string composed_id(const BlockAssignment& a) {
  std::string id = "compose[";
  for (std::size_t r = 0; r < a.blocks.size(); ++r) id += (r ? "," : "") + a.blocks[r].block.name;
  return id + ";" + a.base.block.name + "]";
}

}  // namespace

std::string block_prefix(std::size_t r) { return "b" + std::to_string(r + 1) + "."; }

ComposedIdentity compose(const BlockAssignment& assignment) {
  const auto& blocks = assignment.blocks;
  const auto& base = assignment.base;
  if (blocks.empty()) throw Error(Errc::invalid_config, "a block assignment needs at least one block");

  ComposedIdentity out;
  auto certify = [&](const QBinomialBlock& block) {
    PropertyHResult cert = check_property_H(block, kCertificateTrials, kCertificateSeed, kCertificateTol);
    if (!cert.pass) {
      throw Error(Errc::property_h_violation,
                  "block '" + block.name + "' is not homogeneous in its argument (deviation " +
                      std::to_string(cert.max_deviation) + ")");
    }
    out.certificates.push_back(cert);
  };
  for (const auto& b : blocks) certify(b.block);
  certify(base.block);

  Identity& id = out.identity;
  id.id = composed_id(assignment);
  id.title = "master transformation composed from " + std::to_string(blocks.size()) + " block(s) and a base block";
  for (std::size_t r = 0; r < blocks.size(); ++r) {
    add_block_schema(id, blocks[r].block, block_prefix(r));
    for (const auto& [name, value] : blocks[r].dims) out.dims[block_prefix(r) + name] = value;
  }
  add_block_schema(id, base.block, kBasePrefix);
  for (const auto& [name, value] : base.dims) out.dims[kBasePrefix + name] = value;
  id.base.uses_t = true;
  id.base.fixed_blocks = static_cast<int>(blocks.size());

  std::vector<QBinomialBlock> block_list;
  for (const auto& b : blocks) block_list.push_back(b.block);
  const QBinomialBlock base_block = base.block;

  id.lhs = [block_list, base_block](const Dims& dims) {
    std::vector<Piece> pieces;
    std::size_t offset = 0;
    for (std::size_t r = 0; r < block_list.size(); ++r) {
      const auto size = static_cast<std::size_t>(block_list[r].dimension(local_dims(dims, block_prefix(r), block_list[r])));
      pieces.push_back({offset, size});
      offset += size;
    }
    Piece rest{offset, 0};
    if (base_block.is_transformation()) {
      rest.size = static_cast<std::size_t>(base_block.rest_dimension(local_dims(dims, kBasePrefix, base_block)));
    }
    SeriesSide side;
    side.dimension = static_cast<int>(offset + rest.size);
    side.prefactor = [](const ParameterSet&, const BaseSystem&) { return QComplex(1L); };
    side.term = [block_list, base_block, pieces, rest](const ParameterSet& P, const BaseSystem& B) {
      BlockParams base_view(P, kBasePrefix);
      const QComplex& w = P.scalar(std::string(kBasePrefix) + "z");
      LeftTerm term{{}, pieces, rest, {}, base_block, base_view, B.qt(), w, base_block.product(base_view, B.qt(), w), {}};
      for (std::size_t r = 0; r < block_list.size(); ++r) {
        const std::string prefix = block_prefix(r);
        term.summands.push_back(block_list[r].summand(BlockParams(P, prefix), B.block_base(r), P.scalar(prefix + "z")));
        term.steps.push_back(B.block_step(r));
      }
      return wrap(std::move(term));
    };
    return side;
  };

  id.rhs = [block_list, base_block](const Dims& dims) {
    const auto base_size = static_cast<std::size_t>(base_block.dimension(local_dims(dims, kBasePrefix, base_block)));
    std::vector<Piece> rest_pieces;
    std::size_t offset = base_size;
    for (std::size_t r = 0; r < block_list.size(); ++r) {
      std::size_t size = 0;
      if (block_list[r].is_transformation()) {
        size = static_cast<std::size_t>(block_list[r].rest_dimension(local_dims(dims, block_prefix(r), block_list[r])));
      }
      rest_pieces.push_back({offset, size});
      offset += size;
    }
    SeriesSide side;
    side.dimension = static_cast<int>(offset);
    side.prefactor = [block_list, base_block](const ParameterSet& P, const BaseSystem& B) {
      QComplex p(1L);
      for (std::size_t r = 0; r < block_list.size(); ++r) {
        const std::string prefix = block_prefix(r);
        p *= block_list[r].product(BlockParams(P, prefix), B.block_base(r), P.scalar(prefix + "z"));
      }
      return checked_div(p, base_block.product(BlockParams(P, kBasePrefix), B.qt(),
                                               P.scalar(std::string(kBasePrefix) + "z")));
    };
    side.term = [block_list, base_block, base_size, rest_pieces](const ParameterSet& P, const BaseSystem& B) {
      RightTerm term;
      term.base_summand =
          base_block.summand(BlockParams(P, kBasePrefix), B.qt(), P.scalar(std::string(kBasePrefix) + "z"));
      term.base_piece = {0, base_size};
      term.blocks = block_list;
      term.rest_pieces = rest_pieces;
      for (std::size_t r = 0; r < block_list.size(); ++r) {
        const std::string prefix = block_prefix(r);
        term.views.emplace_back(P, prefix);
        term.bases.push_back(B.block_base(r));
        term.steps.push_back(B.block_step(r));
        term.z.push_back(P.scalar(prefix + "z"));
        term.products.push_back(block_list[r].product(term.views.back(), B.block_base(r), term.z.back()));
      }
      return wrap(std::move(term));
    };
    return side;
  };

  try {
    sample_domain(id, out.dims, 0, 1);
  } catch (const Error& e) {
    if (e.code() == Errc::domain_exhausted) throw Error(Errc::domain_empty, id.id + ": " + e.detail());
    throw;
  }
  return out;
}

ComposedIdentity compose_with_transformation(const BlockInstance& transformation, const BlockInstance& base) {
  if (!transformation.block.is_transformation()) {
    throw Error(Errc::invalid_config, "block '" + transformation.block.name + "' is not a transformation");
  }
  return compose(BlockAssignment{{transformation}, base});
}

}  // namespace qseries::engine
