#include "diffalg/module.hpp"

namespace diffalg {

RVector nf_vector(const QuotientRing& ring, RVector v) {
    for (auto& c : v) c = ring.nf(c);
    return v;
}

bool is_zero_vector(const RVector& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

ModuleMap::ModuleMap(QRPtr ring, std::vector<long> dst_twists, std::vector<long> src_twists,
                     std::vector<RVector> columns)
    : ring_(std::move(ring)),
      dst_twists_(std::move(dst_twists)),
      src_twists_(std::move(src_twists)),
      columns_(std::move(columns)) {
    if (columns_.size() != src_twists_.size())
        throw algebra_error("module map: one column per source generator required");
    for (std::size_t j = 0; j < columns_.size(); ++j) {
        if (columns_[j].size() != dst_twists_.size())
            throw algebra_error("module map: column height mismatch");
        for (std::size_t i = 0; i < dst_twists_.size(); ++i) {
            Polynomial& e = columns_[j][i];
            e = ring_->nf(e);
            if (e.is_zero()) continue;
            auto deg = e.homogeneous_degree();
            if (!deg || *deg != src_twists_[j] - dst_twists_[i])
                throw algebra_error("module map entry is not homogeneous of the declared degree");
        }
    }
}

ModuleMap ModuleMap::zero(QRPtr ring, std::vector<long> dst_twists, std::vector<long> src_twists) {
    std::vector<RVector> cols(src_twists.size(),
                              RVector(dst_twists.size(), Polynomial::zero(ring->poly_ring())));
    return ModuleMap(std::move(ring), std::move(dst_twists), std::move(src_twists), std::move(cols));
}

ModuleMap ModuleMap::identity(QRPtr ring, std::vector<long> twists) {
    std::vector<RVector> cols(twists.size(),
                              RVector(twists.size(), Polynomial::zero(ring->poly_ring())));
    for (std::size_t i = 0; i < twists.size(); ++i)
        cols[i][i] = Polynomial::constant(ring->poly_ring(), ring->field().one());
    std::vector<long> dst = twists;
    return ModuleMap(std::move(ring), std::move(dst), std::move(twists), std::move(cols));
}

ModuleMap ModuleMap::from_columns(QRPtr ring, std::vector<long> dst_twists,
                                  std::vector<RVector> columns) {
    std::vector<long> src;
    for (auto& col : columns) {
        if (col.size() != dst_twists.size()) throw algebra_error("column height mismatch");
        std::optional<long> deg;
        for (std::size_t i = 0; i < col.size(); ++i) {
            col[i] = ring->nf(col[i]);
            if (col[i].is_zero()) continue;
            auto h = col[i].homogeneous_degree();
            if (!h) throw algebra_error("column entry is not homogeneous");
            long candidate = *h + dst_twists[i];
            if (deg && *deg != candidate)
                throw algebra_error("column is not homogeneous for the given twists");
            deg = candidate;
        }
        src.push_back(deg.value_or(0));
    }
    return ModuleMap(std::move(ring), std::move(dst_twists), std::move(src), std::move(columns));
}

bool ModuleMap::is_zero() const {
    for (const auto& col : columns_)
        if (!is_zero_vector(col)) return false;
    return true;
}

RVector ModuleMap::apply(const RVector& v) const {
    if (v.size() != src_rank()) throw algebra_error("module map applied to wrong-rank vector");
    RVector out(dst_rank(), Polynomial::zero(ring_->poly_ring()));
    for (std::size_t j = 0; j < src_rank(); ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < dst_rank(); ++i) {
            if (columns_[j][i].is_zero()) continue;
            out[i] = out[i] + columns_[j][i] * v[j];
        }
    }
    for (auto& c : out) c = ring_->nf(c);
    return out;
}

ModuleMap ModuleMap::dual() const {
    std::vector<long> new_dst, new_src;
    for (long t : src_twists_) new_dst.push_back(-t);
    for (long t : dst_twists_) new_src.push_back(-t);
    std::vector<RVector> cols(dst_rank());
    for (std::size_t i = 0; i < dst_rank(); ++i) {
        RVector col;
        col.reserve(src_rank());
        for (std::size_t j = 0; j < src_rank(); ++j) col.push_back(columns_[j][i]);
        cols[i] = std::move(col);
    }
    return ModuleMap(ring_, std::move(new_dst), std::move(new_src), std::move(cols));
}

ModuleMap ModuleMap::compose(const ModuleMap& inner) const {
    if (inner.dst_rank() != src_rank()) throw algebra_error("composition rank mismatch");
    std::vector<RVector> cols;
    cols.reserve(inner.src_rank());
    for (std::size_t j = 0; j < inner.src_rank(); ++j) cols.push_back(apply(inner.column(j)));
    std::vector<long> dst = {dst_twists_.begin(), dst_twists_.end()};
    std::vector<long> src = {inner.src_twists_.begin(), inner.src_twists_.end()};
    return ModuleMap(ring_, std::move(dst), std::move(src), std::move(cols));
}

PresentedModule::PresentedModule(QRPtr ring, std::vector<long> gen_degrees,
                                 std::vector<RVector> relations)
    : presentation_(ModuleMap::from_columns(std::move(ring), std::move(gen_degrees),
                                            std::move(relations))) {}

PresentedModule PresentedModule::free_module(QRPtr ring, std::size_t n, std::vector<long> twists) {
    if (twists.empty()) twists.assign(n, 0);
    if (twists.size() != n) throw algebra_error("free module twist count mismatch");
    return PresentedModule(ModuleMap::zero(std::move(ring), std::move(twists), {}));
}

PresentedModule PresentedModule::residue_field(QRPtr ring) {
    std::vector<Polynomial> vars;
    for (std::size_t i = 0; i < ring->nvars(); ++i) vars.push_back(ring->variable(i));
    return cyclic(std::move(ring), std::move(vars));
}

PresentedModule PresentedModule::cyclic(QRPtr ring, std::vector<Polynomial> ideal_gens) {
    std::vector<RVector> cols;
    for (auto& g : ideal_gens) {
        Polynomial r = ring->nf(g);
        if (r.is_zero()) continue;
        cols.push_back(RVector{std::move(r)});
    }
    return PresentedModule(std::move(ring), std::vector<long>{0}, std::move(cols));
}

void FreeComplex::validate() const {
    if (twists.size() != diffs.size() + 1) throw algebra_error("complex shape mismatch");
    for (std::size_t i = 0; i < diffs.size(); ++i) {
        if (diffs[i].dst_rank() != twists[i].size() || diffs[i].src_rank() != twists[i + 1].size())
            throw algebra_error("complex differential rank mismatch");
        if (i > 0) {
            ModuleMap sq = diffs[i - 1].compose(diffs[i]);
            if (!sq.is_zero()) throw algebra_error("complex violates d^2 = 0");
        }
    }
}

}  // namespace diffalg
