#include "confspace/specseq.hpp"

#include <algorithm>
#include <exception>
#include <sstream>

namespace confspace {

std::size_t SpectralReport::e3(int p, int q) const {
  auto it = dims.find({p, q});
  return it == dims.end() ? 0 : it->second.e3;
}

namespace {

struct PieceData {
  int p = 0;
  int q = 0;
  std::shared_ptr<const BidegreeSpace> space;
  InvariantSpace inv;
  std::map<int, std::size_t> inv_by_a;
  std::map<int, std::size_t> rank_out;  // rank of d on type-a invariants
};

void trim(std::vector<std::int64_t>& v) {
  while (v.size() > 1 && v.back() == 0) v.pop_back();
  if (v.empty()) v.push_back(0);
}

template <class F>
void parallel_for(std::size_t count, int workers, F&& body) {
  std::exception_ptr error;
#pragma omp parallel for schedule(dynamic, 1) num_threads(workers < 1 ? 1 : workers)
  for (std::size_t k = 0; k < count; ++k) {
    try {
      body(k);
    } catch (...) {
#pragma omp critical(confspace_specseq_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace

SpectralReport e3_dims(int n, const SpectralOptions& opts) {
  SpaceOptions sopts;
  sopts.workers = 1;
  sopts.modular_prescreen = opts.modular_prescreen;
  QuotientAlgebra algebra(n, RelationSet::e2(), sopts);
  return e3_dims(algebra, opts);
}

SpectralReport e3_dims(const QuotientAlgebra& algebra, const SpectralOptions& opts) {
  const int n = algebra.n();
  std::vector<PieceData> pieces;
  std::map<Bidegree, std::size_t> index;
  for (int q = 0; q <= algebra.layout().num_edges(); ++q)
    for (int p = 0; p <= 2 * n; ++p) {
      index[{p, q}] = pieces.size();
      pieces.push_back({p, q, nullptr, {}, {}, {}});
    }

  parallel_for(pieces.size(), opts.workers, [&](std::size_t k) {
    auto& piece = pieces[k];
    piece.space = algebra.space(piece.p, piece.q);
    piece.inv = invariant_basis(*piece.space);
    for (const auto& h : piece.inv.hodge) ++piece.inv_by_a[h.first];
  });

  parallel_for(pieces.size(), opts.workers, [&](std::size_t k) {
    auto& piece = pieces[k];
    auto target = index.find({piece.p + 2, piece.q - 1});
    if (piece.inv.dim() == 0 || target == index.end()) return;
    const auto& dst = *pieces[target->second].space;
    if (dst.dim() == 0) return;
    std::map<int, std::vector<Vector>> images;
    for (std::size_t t = 0; t < piece.inv.dim(); ++t)
      images[piece.inv.hodge[t].first].push_back(
          differential_coords(*piece.space, dst, piece.inv.basis[t]));
    for (const auto& [a, vecs] : images) piece.rank_out[a] = rank_of(vecs, dst.dim());
  });

  SpectralReport report;
  report.n = n;
  for (const auto& piece : pieces) {
    if (piece.space->dim() == 0) continue;
    BidegreeDims d;
    auto source = index.find({piece.p - 2, piece.q + 1});
    for (const auto& [a, inv] : piece.inv_by_a) {
      const std::size_t out = piece.rank_out.count(a) ? piece.rank_out.at(a) : 0;
      std::size_t in = 0;
      if (source != index.end()) {
        const auto& src = pieces[source->second];
        if (src.rank_out.count(a)) in = src.rank_out.at(a);
      }
      if (out + in > inv) {
        std::ostringstream msg;
        msg << "negative E3 dimension at (" << piece.p << "," << piece.q << ") type " << a;
        throw ConsistencyError(msg.str());
      }
      d.e2_inv += inv;
      d.ker += inv - out;
      d.im_in += in;
      const std::size_t e3 = inv - out - in;
      d.e3 += e3;
      if (e3) report.e3_hodge[{piece.p, piece.q, a}] = e3;
    }
    report.dims[{piece.p, piece.q}] = d;
  }
  return report;
}

bool purity_check(SpectralReport& report) {
  report.violations.clear();
  for (const auto& [pq, d] : report.dims) {
    const int diff = pq.first - pq.second;
    if (d.e3 != 0 && diff != 0 && diff != 1) report.violations.push_back(pq);
  }
  report.purity_ok = report.violations.empty();
  return report.purity_ok;
}

void betti_and_hodge(SpectralReport& report) {
  std::vector<std::int64_t> betti(2 * report.n + 1, 0);
  report.hodge.clear();
  for (const auto& [pq, d] : report.dims) {
    if (d.e3 == 0) continue;
    const auto [p, q] = pq;
    const int i = p + q;
    if (p + 2 * q != WeightFn::w(i)) {
      std::ostringstream msg;
      msg << "weight check failed at (" << p << "," << q << "): p+2q=" << p + 2 * q
          << " but w(" << i << ")=" << WeightFn::w(i);
      throw ConsistencyError(msg.str());
    }
    if (i >= static_cast<int>(betti.size())) betti.resize(i + 1, 0);
    betti[i] += static_cast<std::int64_t>(d.e3);
  }
  for (const auto& [key, dim] : report.e3_hodge) {
    const auto [p, q, a] = key;
    const int i = p + q;
    const int b = p + 2 * q - a;
    if (a + b != WeightFn::w(i)) throw ConsistencyError("Hodge type off the weight line");
    report.hodge[{i, a, b}] += static_cast<std::int64_t>(dim);
  }
  trim(betti);
  report.betti = std::move(betti);
}

bool higher_differentials_vanish(const SpectralReport& report) {
  for (const auto& [pq, d] : report.dims) {
    if (d.e3 == 0) continue;
    const auto [p, q] = pq;
    for (int r = 3; q - r + 1 >= 0; ++r)
      if (report.e3(p + r, q - r + 1) != 0) return false;
  }
  return true;
}

std::vector<std::int64_t> series_betti(int n) {
  const Series s = expand(punctured_torus_conf_closed_form(), n);
  auto betti = decode_betti<WeightFn>(s[n], n);
  trim(betti);
  return betti;
}

HodgeTable series_hodge(int n) {
  const Series s = expand(punctured_torus_conf_hodge_closed_form(), n);
  HodgeTable table = decode_hodge(s[n], n);
  std::erase_if(table, [](const auto& kv) { return kv.second == 0; });
  return table;
}

SeriesVerdict verify_against_series(const SpectralReport& report, bool with_hodge) {
  SeriesVerdict verdict;
  const auto expected = series_betti(report.n);
  auto engine = report.betti;
  trim(engine);
  const std::size_t len = std::max(expected.size(), engine.size());
  for (std::size_t i = 0; i < len; ++i) {
    const std::int64_t e = i < engine.size() ? engine[i] : 0;
    const std::int64_t s = i < expected.size() ? expected[i] : 0;
    if (e != s) {
      std::ostringstream msg;
      msg << "h^" << i << ": engine " << e << ", series " << s;
      verdict.mismatches.push_back(msg.str());
    }
  }
  if (with_hodge) {
    const auto table = series_hodge(report.n);
    HodgeTable all = table;
    for (const auto& [k, v] : report.hodge) all.emplace(k, 0);
    for (const auto& [k, unused] : all) {
      (void)unused;
      const std::int64_t e = report.hodge.count(k) ? report.hodge.at(k) : 0;
      const std::int64_t s = table.count(k) ? table.at(k) : 0;
      if (e != s) {
        std::ostringstream msg;
        msg << "h^{" << k.a << "," << k.b << "}(H^" << k.i << "): engine " << e << ", series " << s;
        verdict.mismatches.push_back(msg.str());
      }
    }
  }
  verdict.match = verdict.mismatches.empty();
  return verdict;
}

SpectralReport spectral_report(int n, const SpectralOptions& opts) {
  SpectralReport report = e3_dims(n, opts);
  purity_check(report);
  betti_and_hodge(report);
  report.series_match = verify_against_series(report).match;
  return report;
}

}  // namespace confspace
