#include "stratkit/strat.hpp"

#include <algorithm>
#include <functional>

#include "stratkit/error.hpp"

namespace stratkit {

Poset posetFromPresentation(const Presentation& p) {
  std::vector<std::pair<std::string, std::string>> covers;
  for (const auto& [lo, hi] : p.orderCovers)
    covers.emplace_back(p.quiver.vertices[lo], p.quiver.vertices[hi]);
  return posetFromCovers(p.quiver.vertices, covers);
}

TruncationQuotient truncate(const AlgebraPtr& a, const Poset& p,
                            std::vector<int> segment) {
  std::sort(segment.begin(), segment.end());
  segment.erase(std::unique(segment.begin(), segment.end()), segment.end());
  for (int x : segment)
    if (x < 0 || x >= p.size())
      fail(ErrorKind::UnknownVertex, "segment vertex index out of range");
  ensure(p.size() == static_cast<int>(a->idem.size()),
         "poset does not match the algebra's vertex set");
  if (!isInitialSegment(p, segment)) {
    std::string names;
    for (int x : segment) names += (names.empty() ? "" : ",") + p.elems[x];
    fail(ErrorKind::NotInitialSegment,
         "{" + names + "} is not an initial segment of the declared order");
  }
  std::vector<bool> in(p.size(), false);
  for (int x : segment) in[x] = true;
  std::vector<Vec> seeds;
  for (int x = 0; x < p.size(); ++x)
    if (!in[x]) seeds.push_back(a->idem[x]);
  const Mat seed = Mat::fromColumns(a->field, a->dim, seeds);
  TruncationQuotient tq;
  tq.segment = segment;
  tq.kernel = idealClosure(*a, seed);
  AlgebraQuotient q = quotientByIdeal(a, tq.kernel);
  tq.table = q.table;
  tq.proj = q.proj;
  tq.section = q.section;
  return tq;
}

bool actionFactorsThrough(const TruncationQuotient& tq, const Module& v) {
  for (int c = 0; c < tq.kernel.cols(); ++c)
    if (!v.act(tq.kernel.col(c)).isZero()) return false;
  return true;
}

Module restrictToQuotient(const TruncationQuotient& tq, const Module& v) {
  if (!actionFactorsThrough(tq, v))
    fail(ErrorKind::NotTruncatedModule,
         "module '" + v.name + "' is not supported on the segment");
  Module m;
  m.algebra = tq.table;
  m.side = v.side;
  m.dim = v.dim;
  for (int j = 0; j < tq.table->dim; ++j) m.action.push_back(v.act(tq.section.col(j)));
  m.name = v.name;
  return m;
}

namespace {

// A(Y) e_y as an A-module, for an arbitrary initial segment Y containing y.
std::pair<Module, Vec> segmentStandard(const AlgebraPtr& a, const TruncationQuotient& tq,
                                       int y) {
  const Module reg = regularModule(tq.table);
  const SubmoduleResult sub = submoduleGenerated(reg, {tq.table->idem[y]});
  Module m = inflate(sub.sub, a, tq.proj);
  auto gen = solve(sub.inclusion,
                   Mat::fromColumns(a->field, tq.table->dim, {tq.table->idem[y]}));
  ensure(gen.has_value(), "generator not inside its own submodule");
  return {std::move(m), gen->col(0)};
}

}  // namespace

StandardModule standardModule(const AlgebraPtr& a, const Poset& p, int y) {
  if (y < 0 || y >= p.size())
    fail(ErrorKind::UnknownVertex, "standard module vertex out of range");
  const TruncationQuotient tq = truncate(a, p, downClosure(p, {y}));
  auto [m, gen] = segmentStandard(a, tq, y);
  m.name = "M_" + p.elems[y];
  // Support containment is automatic (off-segment idempotents die in A(Y)).
  for (int x : support(m))
    ensure(p.le(x, y), "standard module supported outside the down-closure");
  return {y, std::move(m), gen};
}

std::vector<WelldefRow> checkStandardWelldefined(const AlgebraPtr& a, const Poset& p) {
  std::vector<WelldefRow> rows;
  for (int y = 0; y < p.size(); ++y) {
    WelldefRow row;
    row.vertex = y;
    const StandardModule my = standardModule(a, p, y);
    row.dimStandard = my.mod.dim;
    // Widest initial segment in which y is maximal: everything not above y.
    std::vector<int> wide;
    for (int x = 0; x < p.size(); ++x)
      if (!(x != y && p.le(y, x))) wide.push_back(x);
    const TruncationQuotient tq = truncate(a, p, wide);
    auto [w, gen] = segmentStandard(a, tq, y);
    (void)gen;
    row.dimWide = w.dim;
    row.pass = true;
    for (int x : support(w))
      if (!p.le(x, y)) {
        row.outside.push_back(x);
        row.pass = false;
      }
    rows.push_back(std::move(row));
  }
  return rows;
}

bool exhaustiveWelldefined(const AlgebraPtr& a, const Poset& p) {
  for (const auto& seg : initialSegments(p)) {
    if (seg.empty()) continue;
    const TruncationQuotient tq = truncate(a, p, seg);
    for (int y : seg) {
      bool maximal = true;
      for (int x : seg)
        if (x != y && p.le(y, x)) maximal = false;
      if (!maximal) continue;
      auto [w, gen] = segmentStandard(a, tq, y);
      (void)gen;
      for (int x : support(w))
        if (!p.le(x, y)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Filtrations

namespace {

// Basis of e_y Q as columns.
Mat vertexPart(const Module& q, int y) {
  const Mat img = q.act(q.algebra->idem[y]);
  Span span(q.algebra->field, q.dim);
  for (int c = 0; c < q.dim; ++c) span.add(img.col(c));
  return span.basis();
}

struct GreedyLayer {
  int vertex;
  int copies;
  std::vector<Mat> maps;  // one per copy: dim Q x dim M_y, intertwining, injective
};

// One greedy step on the current quotient module Q; appends to diag on
// failure and throws the documented errors.
GreedyLayer greedyStep(const AlgebraPtr& a, const Poset& p, const Module& q) {
  const Field& f = a->field;
  const std::vector<int> supp = support(q);
  ensure(!supp.empty(), "greedy step on zero module");
  const std::vector<int> down = downClosure(p, supp);
  // maximal elements of the down-closure, first by declared order
  int y = -1;
  for (int cand : down) {
    bool maximal = true;
    for (int other : down)
      if (other != cand && p.le(cand, other)) maximal = false;
    if (maximal) {
      y = cand;
      break;
    }
  }
  ensure(y >= 0, "no maximal element in a nonempty finite poset");

  const StandardModule my = standardModule(a, p, y);
  if (my.mod.dim == 0)
    fail(ErrorKind::NoFiltrationFound,
         "standard module M_" + p.elems[y] + " is zero but the vertex supports " +
             q.name);
  if (my.mod.dim > q.dim)
    fail(ErrorKind::NoFiltrationFound,
         "layer M_" + p.elems[y] + " has dimension " + std::to_string(my.mod.dim) +
             ", exceeding the remaining module of dimension " + std::to_string(q.dim));
  const Mat eyQ = vertexPart(q, y);
  const Mat eyM = vertexPart(my.mod, y);
  if (eyM.cols() == 0)
    fail(ErrorKind::NoFiltrationFound,
         "M_" + p.elems[y] + " has no component at its own vertex");
  if (eyQ.cols() % eyM.cols() != 0)
    fail(ErrorKind::DivisibilityFailure,
         "dim e_" + p.elems[y] + " V = " + std::to_string(eyQ.cols()) +
             " is not a multiple of dim e_" + p.elems[y] +
             " M = " + std::to_string(eyM.cols()));
  const int k = eyQ.cols() / eyM.cols();

  // The kernel ideal of the truncation must kill a generator candidate for
  // the induced map M_y -> Q to be defined.
  const TruncationQuotient tq = truncate(a, p, downClosure(p, {y}));
  auto welldefOn = [&](const Vec& v) {
    for (int c = 0; c < tq.kernel.cols(); ++c)
      if (!isZeroVec(q.act(tq.kernel.col(c)) * v)) return false;
    return true;
  };
  // phi_v sends the basis vector of M_y lifted to u in A to act_Q(u) v.
  std::vector<Mat> lifts;  // action of the lift of each M_y basis vector
  {
    const TruncationQuotient& t = tq;
    const Module regB = regularModule(t.table);
    const SubmoduleResult sub = submoduleGenerated(regB, {t.table->idem[y]});
    for (int j = 0; j < sub.sub.dim; ++j)
      lifts.push_back(q.act(t.section * sub.inclusion.col(j)));
  }
  auto mapFor = [&](const Vec& v) {
    Mat m(f, q.dim, my.mod.dim);
    for (size_t j = 0; j < lifts.size(); ++j) m.setCol(static_cast<int>(j), lifts[j] * v);
    return m;
  };

  // Candidate generators: basis of e_y Q, then pairwise sums/differences.
  std::vector<Vec> cands;
  for (int c = 0; c < eyQ.cols(); ++c) cands.push_back(eyQ.col(c));
  for (int i = 0; i < eyQ.cols(); ++i)
    for (int j = i + 1; j < eyQ.cols(); ++j) {
      cands.push_back(addVec(eyQ.col(i), eyQ.col(j)));
      cands.push_back(addVec(eyQ.col(i), scaleVec(Scalar::fromInt(f, -1), eyQ.col(j))));
    }

  GreedyLayer layer;
  layer.vertex = y;
  layer.copies = k;
  Span image(f, q.dim);
  for (const Vec& v : cands) {
    if (static_cast<int>(layer.maps.size()) == k) break;
    if (!welldefOn(v)) continue;
    const Mat phi = mapFor(v);
    if (rank(phi) != my.mod.dim) continue;
    Span trial = image;
    bool independent = true;
    for (int c = 0; c < phi.cols(); ++c)
      if (!trial.add(phi.col(c))) {
        independent = false;
        break;
      }
    if (!independent) continue;
    image = trial;
    layer.maps.push_back(phi);
  }
  if (static_cast<int>(layer.maps.size()) != k)
    fail(ErrorKind::NoFiltrationFound,
         "could not embed " + std::to_string(k) + " copies of M_" + p.elems[y] +
             " into " + q.name + " (found " + std::to_string(layer.maps.size()) + ")");
  // The embedded copies must exhaust the submodule generated by e_y Q.
  std::vector<Vec> gens;
  for (int c = 0; c < eyQ.cols(); ++c) gens.push_back(eyQ.col(c));
  const SubmoduleResult generated = submoduleGenerated(q, gens);
  if (generated.sub.dim != k * my.mod.dim || !image.containsAll(generated.inclusion))
    fail(ErrorKind::NoFiltrationFound,
         "submodule generated by e_" + p.elems[y] + " " + q.name +
             " is not a sum of copies of M_" + p.elems[y]);
  return layer;
}

}  // namespace

FiltrationCertificate standardFiltration(const AlgebraPtr& a, const Poset& p,
                                         const Module& v) {
  const Field& f = a->field;
  FiltrationCertificate cert;
  // current quotient of v, with projection and a linear section from v
  Module q = v;
  Mat proj = Mat::identity(f, v.dim);
  Mat section = Mat::identity(f, v.dim);
  Span accumulated(f, v.dim);  // basis of the part of v already consumed
  while (q.dim > 0) {
    const GreedyLayer layer = greedyStep(a, p, q);
    Mat layerSpan(f, q.dim, 0);
    for (const Mat& phi : layer.maps) {
      // witness: lift of M_y -> q back into v coordinates
      cert.layerVertex.push_back(layer.vertex);
      cert.witness.push_back(section * phi);
      layerSpan = layerSpan.hstack(phi);
      for (int c = 0; c < phi.cols(); ++c) accumulated.add(section * phi.col(c));
      cert.chain.push_back(accumulated.basis());
    }
    const QuotientResult qr = quotientModule(q, layerSpan);
    q = qr.quo;
    q.name = v.name;
    proj = qr.proj * proj;
    section = section * qr.section;
  }
  cert.verified = verifyFiltration(a, p, v, cert);
  ensure(cert.verified, "emitted filtration certificate failed self-verification");
  return cert;
}

bool verifyFiltration(const AlgebraPtr& a, const Poset& p, const Module& v,
                      const FiltrationCertificate& cert, std::string* why) {
  const Field& f = a->field;
  auto reject = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (cert.chain.size() != cert.layerVertex.size() ||
      cert.witness.size() != cert.layerVertex.size())
    return reject("certificate arrays disagree in length");
  int prevDim = 0;
  int dimSum = 0;
  Mat prev(f, v.dim, 0);
  for (size_t i = 0; i < cert.chain.size(); ++i) {
    const Mat& basis = cert.chain[i];
    const StandardModule my = standardModule(a, p, cert.layerVertex[i]);
    dimSum += my.mod.dim;
    if (basis.cols() != prevDim + my.mod.dim) return reject("chain dimensions do not step by layer sizes");
    Span span(f, v.dim);
    for (int c = 0; c < basis.cols(); ++c)
      if (!span.add(basis.col(c))) return reject("chain basis is degenerate");
    // previous stage contained in this one
    if (!span.containsAll(prev)) return reject("chain is not increasing");
    // action stability
    for (int c = 0; c < basis.cols(); ++c)
      for (const Mat& act : v.action)
        if (!span.contains(act * basis.col(c))) return reject("chain stage is not action stable");
    // layer witness: M_y -> V_{i+1}/V_i must be an intertwining bijection
    Span prevSpan(f, v.dim);
    for (int c = 0; c < prev.cols(); ++c) prevSpan.add(prev.col(c));
    const Cokernel cok = cokernel(f, v.dim, prev);
    const Mat& w = cert.witness[i];
    if (w.rows() != v.dim || w.cols() != my.mod.dim) return reject("witness shape");
    // image inside V_{i+1}
    for (int c = 0; c < w.cols(); ++c)
      if (!span.contains(w.col(c))) return reject("witness image escapes its chain stage");
    const Mat induced = cok.proj * w;  // M_y -> V/V_i
    // injectivity onto the quotient layer
    if (rank(induced) != my.mod.dim) return reject("witness is not injective on the layer");
    // intertwining modulo V_i
    for (int t = 0; t < a->dim; ++t) {
      const Mat lhs = cok.proj * v.action[t] * w;
      const Mat rhs = induced * my.mod.action[t];
      if (!(lhs == rhs)) return reject("witness does not intertwine the actions");
    }
    prev = basis;
    prevDim = basis.cols();
  }
  if (prevDim != v.dim || dimSum != v.dim)
    return reject("chain does not exhaust the module");
  if (why) why->clear();
  return true;
}

ExhaustiveFiltration exhaustiveFiltration(const AlgebraPtr& a, const Poset& p,
                                          const Module& v) {
  if (v.dim > 8) fail(ErrorKind::TooLarge, "exhaustive filtration search limited to dim 8");
  const Field& f = a->field;
  std::vector<StandardModule> standards;
  for (int y = 0; y < p.size(); ++y) standards.push_back(standardModule(a, p, y));

  ExhaustiveFiltration out{false, true, {}};
  std::vector<int> stack;
  // Depth-first: embed some standard module at the bottom, recurse on the
  // quotient.  Complete when every candidate space has dimension <= 1.
  std::function<bool(const Module&)> search = [&](const Module& q) -> bool {
    if (q.dim == 0) return true;
    for (int y = 0; y < p.size(); ++y) {
      const StandardModule& my = standards[y];
      if (my.mod.dim == 0 || my.mod.dim > q.dim) continue;
      const std::vector<Mat> maps = homSpace(my.mod, q);
      if (maps.empty()) continue;
      std::vector<Mat> candidates;
      if (maps.size() == 1) {
        candidates.push_back(maps[0]);
      } else {
        out.complete = false;  // sampled, not exhaustive
        for (const Mat& m : maps) candidates.push_back(m);
        for (size_t i = 0; i < maps.size(); ++i)
          for (size_t j = i + 1; j < maps.size(); ++j) {
            candidates.push_back(maps[i] + maps[j]);
            candidates.push_back(maps[i] - maps[j]);
          }
      }
      for (const Mat& m : candidates) {
        if (rank(m) != my.mod.dim) continue;
        QuotientResult qr = [&]() {
          return quotientModule(q, m);
        }();
        stack.push_back(y);
        if (search(qr.quo)) return true;
        stack.pop_back();
      }
    }
    return false;
  };
  (void)f;
  if (search(v)) {
    out.found = true;
    out.layerVertex = stack;
  }
  return out;
}

StratificationReport checkHypotheses(const AlgebraPtr& a, const Poset& p) {
  StratificationReport rep;
  rep.welldef = checkStandardWelldefined(a, p);
  rep.pass = true;
  for (const auto& row : rep.welldef)
    if (!row.pass) {
      rep.pass = false;
      if (rep.firstFailure.empty())
        rep.firstFailure = "well-definedness at " + p.elems[row.vertex];
    }
  for (int x = 0; x < p.size(); ++x) {
    StratificationReport::ProjRow row;
    row.vertex = x;
    const Module proj = regularProjective(a, x);
    try {
      const FiltrationCertificate cert = standardFiltration(a, p, proj);
      row.pass = true;
      row.layers = cert.layerVertex;
    } catch (const Error& e) {
      row.pass = false;
      row.error = e.what();
      rep.pass = false;
      if (rep.firstFailure.empty())
        rep.firstFailure = "filtration of A" + p.elems[x];
    }
    rep.filtrations.push_back(std::move(row));
  }
  return rep;
}

HeredityChainCertificate heredityChain(const AlgebraPtr& a, const Poset& p) {
  const StratificationReport rep = checkHypotheses(a, p);
  if (!rep.pass)
    fail(ErrorKind::HypothesisViolated,
         "stratification hypotheses fail: " + rep.firstFailure);
  const Field& f = a->field;
  HeredityChainCertificate cert;
  AlgebraPtr current = a;
  Mat fromA = Mat::identity(f, a->dim);  // cumulative projection A -> current
  std::vector<int> remaining;
  for (int x = 0; x < p.size(); ++x) remaining.push_back(x);

  while (!remaining.empty()) {
    // maximal within the remaining segment, first by declared order
    int x = -1;
    for (int cand : remaining) {
      bool maximal = true;
      for (int other : remaining)
        if (other != cand && p.le(cand, other)) maximal = false;
      if (maximal) {
        x = cand;
        break;
      }
    }
    ensure(x >= 0, "no maximal element while vertices remain");

    HeredityStep step;
    step.vertex = x;
    const Mat ideal =
        idealClosure(*current, Mat::fromColumns(f, current->dim, {current->idem[x]}));
    step.idealDim = ideal.cols();
    const Module pmod = regularProjective(current, x);
    if (pmod.dim == 0) {
      if (step.idealDim != 0)
        fail(ErrorKind::WitnessFailure,
             "ideal of a vanished idempotent is nonzero at " + p.elems[x]);
      step.multiplicity = 0;
    } else {
      if (step.idealDim % pmod.dim != 0)
        fail(ErrorKind::WitnessFailure,
             "dim of the ideal at " + p.elems[x] + " (" + std::to_string(step.idealDim) +
                 ") is not a multiple of dim Ae (" + std::to_string(pmod.dim) + ")");
      // Assemble right-multiplication witnesses per target vertex.
      Span image(f, current->dim);
      const Mat inclP = submoduleGenerated(regularModule(current), {current->idem[x]}).inclusion;
      int picks = 0;
      for (int y = 0; y < p.size(); ++y) {
        const PeirceBlock blk = peirceBlock(*current, x, y);
        std::vector<Vec> ws;
        for (int c = 0; c < blk.basis.cols(); ++c) ws.push_back(blk.basis.col(c));
        for (int i = 0; i < blk.basis.cols(); ++i)
          for (int j = i + 1; j < blk.basis.cols(); ++j) {
            ws.push_back(addVec(blk.basis.col(i), blk.basis.col(j)));
            ws.push_back(addVec(blk.basis.col(i),
                                scaleVec(Scalar::fromInt(f, -1), blk.basis.col(j))));
          }
        int yPicks = 0;
        for (const Vec& w : ws) {
          // right multiplication by w as a map Ae_x -> A
          Mat rw(f, current->dim, pmod.dim);
          for (int c = 0; c < pmod.dim; ++c)
            rw.setCol(c, current->mulVec(inclP.col(c), w));
          if (rank(rw) != pmod.dim) continue;
          Span trial = image;
          bool independent = true;
          for (int c = 0; c < rw.cols(); ++c)
            if (!trial.add(rw.col(c))) {
              independent = false;
              break;
            }
          if (!independent) continue;
          image = trial;
          ++picks;
          ++yPicks;
        }
        if (yPicks > 0) step.witnessCounts.emplace_back(y, yPicks);
      }
      step.multiplicity = picks;
      if (image.dim() != step.idealDim || picks * pmod.dim != step.idealDim)
        fail(ErrorKind::WitnessFailure,
             "projectivity witness for the ideal at " + p.elems[x] +
                 " does not span: got " + std::to_string(image.dim()) + " of " +
                 std::to_string(step.idealDim));
    }

    const AlgebraQuotient q = quotientByIdeal(current, ideal);
    step.quotient = q.table;
    fromA = q.proj * fromA;
    remaining.erase(std::find(remaining.begin(), remaining.end(), x));

    // Prefix consistency: the accumulated quotient is the direct truncation.
    const TruncationQuotient direct = truncate(a, p, remaining);
    const Mat map = fromA * direct.section;
    step.prefixConsistent = (direct.table->dim == step.quotient->dim) &&
                            isAlgebraIso(*direct.table, *step.quotient, map);
    cert.steps.push_back(std::move(step));
    current = q.table;
  }
  cert.pass = true;
  for (const auto& s : cert.steps) cert.pass = cert.pass && s.prefixConsistent;
  return cert;
}

std::pair<std::vector<int>, bool> resolveSegment(const AlgebraPtr& a, const Poset& p,
                                                 const std::vector<std::string>& names) {
  (void)a;
  std::vector<int> picked;
  for (const auto& n : names) picked.push_back(p.index(n));
  std::sort(picked.begin(), picked.end());
  picked.erase(std::unique(picked.begin(), picked.end()), picked.end());
  std::vector<int> closed = downClosure(p, picked);
  const bool widened = closed.size() != picked.size();
  return {closed, widened};
}

}  // namespace stratkit
