#include "stratkit/report.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

#include "stratkit/corpus.hpp"
#include "stratkit/error.hpp"

namespace stratkit {

using json = nlohmann::ordered_json;

namespace {

std::string segmentNames(const Poset& p, const std::vector<int>& seg) {
  std::string s = "{";
  for (size_t i = 0; i < seg.size(); ++i) {
    if (i) s += ",";
    s += p.elems[seg[i]];
  }
  return s + "}";
}

json segmentJson(const Poset& p, const std::vector<int>& seg) {
  json arr = json::array();
  for (int x : seg) arr.push_back(p.elems[x]);
  return arr;
}

std::string joinDims(const std::vector<int>& dims) {
  std::string s;
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) s += " ";
    s += std::to_string(dims[i]);
  }
  return s;
}

std::string configLine(const RunConfig& cfg) {
  std::string seg = "-";
  if (cfg.segmentGiven) {
    seg = "";
    for (size_t i = 0; i < cfg.segment.size(); ++i) seg += (i ? "," : "") + cfg.segment[i];
    if (seg.empty()) seg = "(empty)";
  }
  std::string params = "-";
  if (!cfg.params.empty()) {
    params = "";
    for (size_t i = 0; i < cfg.params.size(); ++i)
      params += (i ? "," : "") + cfg.params[i].first + "=" + cfg.params[i].second;
  }
  return "# command: " + cfg.command + " | input: " + cfg.input +
         " | bound: " + std::to_string(cfg.bound) + " | segment: " + seg +
         " | params: " + params;
}

json configJson(const RunConfig& cfg) {
  json j;
  j["command"] = cfg.command;
  j["input"] = cfg.input;
  j["bound"] = cfg.bound;
  if (cfg.segmentGiven)
    j["segment"] = cfg.segment;
  else
    j["segment"] = nullptr;
  json params = json::object();
  for (const auto& [k, v] : cfg.params) params[k] = v;
  j["params"] = params;
  return j;
}

json wrap(const RunConfig& cfg) {
  json j;
  j["version"] = kToolVersion;
  j["config"] = configJson(cfg);
  return j;
}

// ---------------------------------------------------------------------------
// per-command runners; each returns the exit code

int cmdBasis(const Pipeline& pl, const RunConfig& cfg, std::ostream& out) {
  const auto& nf = pl.rs.normalForms;
  if (cfg.json) {
    json j = wrap(cfg);
    j["dim"] = static_cast<int>(nf.size());
    json labels = json::array();
    for (const auto& w : nf) {
      json e;
      e["label"] = wordName(pl.pres.quiver, w);
      e["src"] = pl.pres.quiver.vertices[w.src];
      e["tgt"] = pl.pres.quiver.vertices[w.tgt];
      labels.push_back(e);
    }
    j["basis"] = labels;
    out << j.dump(2) << "\n";
  } else {
    out << configLine(cfg) << "\n";
    out << "basis: " << nf.size() << " normal forms\n";
    for (const auto& w : nf)
      out << "  " << wordName(pl.pres.quiver, w) << "  (" << pl.pres.quiver.vertices[w.src]
          << " -> " << pl.pres.quiver.vertices[w.tgt] << ")\n";
  }
  return 0;
}

int cmdPeirce(const Pipeline& pl, const RunConfig& cfg, std::ostream& out) {
  const auto& a = *pl.algebra;
  const int n = static_cast<int>(a.idem.size());
  if (cfg.json) {
    json j = wrap(cfg);
    json blocks = json::array();
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const PeirceBlock blk = peirceBlock(a, x, y);
        json e;
        e["left"] = a.vertexNames[x];
        e["right"] = a.vertexNames[y];
        e["dim"] = blk.basis.cols();
        e["labels"] = blk.labels;
        blocks.push_back(e);
      }
    j["blocks"] = blocks;
    out << j.dump(2) << "\n";
  } else {
    out << configLine(cfg) << "\n";
    out << "peirce blocks e_x A e_y:\n";
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const PeirceBlock blk = peirceBlock(a, x, y);
        out << "  " << a.vertexNames[x] << "." << a.vertexNames[y] << ": dim "
            << blk.basis.cols();
        if (!blk.labels.empty()) {
          out << " {";
          for (size_t i = 0; i < blk.labels.size(); ++i)
            out << (i ? ", " : "") << blk.labels[i];
          out << "}";
        }
        out << "\n";
      }
  }
  return 0;
}

int cmdSimples(const Pipeline& pl, const RunConfig& cfg, std::ostream& out) {
  const SimpleList sl = radicalAndSimples(pl.algebra);
  if (cfg.json) {
    json j = wrap(cfg);
    j["radical_dim"] = sl.radicalBasis.cols();
    j["radical_nilpotency"] = sl.radicalNilIndex;
    j["semisimple_dim"] = sl.semisimpleQuotient->dim;
    j["product_of_ground_fields"] = sl.productOfGroundFields;
    json arr = json::array();
    for (const auto& s : sl.simples) {
      json e;
      e["label"] = s.label;
      e["dim"] = s.mod.dim;
      e["multiplicity"] = s.multiplicity;
      e["vertex"] = s.vertex >= 0 ? json(pl.algebra->vertexNames[s.vertex]) : json(nullptr);
      arr.push_back(e);
    }
    j["simples"] = arr;
    out << j.dump(2) << "\n";
  } else {
    out << configLine(cfg) << "\n";
    out << "radical: dim " << sl.radicalBasis.cols() << ", nilpotency index "
        << sl.radicalNilIndex << "\n";
    out << "semisimple quotient: dim " << sl.semisimpleQuotient->dim
        << " (product of ground fields: " << (sl.productOfGroundFields ? "yes" : "no")
        << ")\n";
    out << "simples:\n";
    for (const auto& s : sl.simples) {
      out << "  " << s.label << "  dim " << s.mod.dim << "  multiplicity "
          << s.multiplicity;
      if (s.vertex >= 0) out << "  vertex " << pl.algebra->vertexNames[s.vertex];
      out << "\n";
    }
  }
  return 0;
}

json welldefJson(const Pipeline& pl, const std::vector<WelldefRow>& rows) {
  json arr = json::array();
  for (const auto& r : rows) {
    json e;
    e["vertex"] = pl.poset.elems[r.vertex];
    e["pass"] = r.pass;
    e["dim_standard"] = r.dimStandard;
    e["dim_wide"] = r.dimWide;
    arr.push_back(e);
  }
  return arr;
}

json filtrationsJson(const Pipeline& pl, const StratificationReport& rep) {
  json arr = json::array();
  for (const auto& r : rep.filtrations) {
    json e;
    e["projective"] = "A" + pl.poset.elems[r.vertex];
    e["pass"] = r.pass;
    if (r.pass) {
      json layers = json::array();
      for (int y : r.layers) layers.push_back("M_" + pl.poset.elems[y]);
      e["layers"] = layers;
    } else {
      e["error"] = r.error;
    }
    arr.push_back(e);
  }
  return arr;
}

void printHypotheses(const Pipeline& pl, const StratificationReport& rep,
                     std::ostream& out) {
  out << "well-defined standard modules:\n";
  for (const auto& r : rep.welldef)
    out << "  M_" << pl.poset.elems[r.vertex] << ": " << (r.pass ? "PASS" : "FAIL")
        << " (dim " << r.dimStandard << ", widest-segment dim " << r.dimWide << ")\n";
  out << "standard filtrations of projectives:\n";
  for (const auto& r : rep.filtrations) {
    out << "  A" << pl.poset.elems[r.vertex] << ": ";
    if (r.pass) {
      out << "PASS layers [";
      for (size_t i = 0; i < r.layers.size(); ++i)
        out << (i ? ", " : "") << "M_" << pl.poset.elems[r.layers[i]];
      out << "]\n";
    } else {
      out << "FAIL (" << r.error << ")\n";
    }
  }
}

int cmdCheck(const Pipeline& pl, const RunConfig& cfg, std::ostream& out) {
  const StratificationReport rep = checkHypotheses(pl.algebra, pl.poset);
  if (cfg.json) {
    json j = wrap(cfg);
    json hyp;
    hyp["welldefined"] = welldefJson(pl, rep.welldef);
    hyp["filtrations"] = filtrationsJson(pl, rep);
    j["hypotheses"] = hyp;
    j["verdict"] = rep.pass ? "PASS" : "FAIL";
    if (!rep.pass) j["first_failure"] = rep.firstFailure;
    out << j.dump(2) << "\n";
  } else {
    out << configLine(cfg) << "\n";
    printHypotheses(pl, rep, out);
    out << "verdict: " << (rep.pass ? "PASS" : "FAIL");
    if (!rep.pass) out << " (" << rep.firstFailure << ")";
    out << "\n";
  }
  return rep.pass ? 0 : 1;
}

int cmdChain(const Pipeline& pl, const RunConfig& cfg, std::ostream& out) {
  const HeredityChainCertificate cert = heredityChain(pl.algebra, pl.poset);
  if (cfg.json) {
    json j = wrap(cfg);
    json steps = json::array();
    for (const auto& s : cert.steps) {
      json e;
      e["vertex"] = pl.poset.elems[s.vertex];
      e["ideal_dim"] = s.idealDim;
      e["multiplicity"] = s.multiplicity;
      e["quotient_dim"] = s.quotient->dim;
      e["prefix_consistent"] = s.prefixConsistent;
      steps.push_back(e);
    }
    j["chain"] = steps;
    j["verdict"] = cert.pass ? "PASS" : "FAIL";
    out << j.dump(2) << "\n";
  } else {
    out << configLine(cfg) << "\n";
    out << "heredity chain:\n";
    int i = 0;
    for (const auto& s : cert.steps) {
      out << "  step " << ++i << ": remove " << pl.poset.elems[s.vertex] << "; ideal dim "
          << s.idealDim << " = " << s.multiplicity << " x dim A"
          << pl.poset.elems[s.vertex] << "; quotient dim " << s.quotient->dim << "; "
          << (s.prefixConsistent ? "prefix consistent" : "PREFIX MISMATCH") << "\n";
    }
    out << "verdict: " << (cert.pass ? "PASS" : "FAIL") << "\n";
  }
  return cert.pass ? 0 : 1;
}

int cmdExt(const Pipeline& pl, const RunConfig& cfg, std::ostream& out) {
  const SimpleList sl = radicalAndSimples(pl.algebra);
  std::vector<std::pair<std::string, std::string>> pairs;
  if (!cfg.fromLabel.empty() || !cfg.toLabel.empty()) {
    if (cfg.fromLabel.empty() || cfg.toLabel.empty())
      fail(ErrorKind::Invalid, "ext requires both --from and --to (or neither)");
    pairs.emplace_back(cfg.fromLabel, cfg.toLabel);
  } else {
    for (const auto& s : sl.simples)
      for (const auto& t : sl.simples) pairs.emplace_back(s.label, t.label);
  }
  auto find = [&](const std::string& label) -> const Module& {
    const int i = sl.findLabel(label);
    if (i < 0) fail(ErrorKind::UnknownSymbol, "no simple module labeled '" + label + "'");
    return sl.simples[i].mod;
  };
  json rows = json::array();
  std::ostringstream text;
  for (const auto& [from, to] : pairs) {
    const ExtTable t = extDims(pl.algebra, find(from), find(to), cfg.bound);
    if (cfg.json) {
      json e;
      e["from"] = from;
      e["to"] = to;
      e["dims"] = t.dims;
      rows.push_back(e);
    } else {
      text << "Ext^n(" << from << ", " << to << ") for n = 0.." << cfg.bound << ": "
           << joinDims(t.dims) << "\n";
    }
  }
  if (cfg.json) {
    json j = wrap(cfg);
    j["ext"] = rows;
    out << j.dump(2) << "\n";
  } else {
    out << configLine(cfg) << "\n" << text.str();
  }
  return 0;
}

json certificateJson(const Pipeline& pl, const EmbeddingCertificate& cert) {
  json j;
  j["segment"] = segmentJson(pl.poset, cert.segment);
  j["bound"] = cert.bound;
  j["flat_dim"] = dimensionVerdictStr(cert.flatDim);
  json unit = json::array();
  for (const auto& r : cert.unit) {
    json e;
    e["simple"] = r.simple;
    e["hom_dim"] = r.homDim;
    e["dim"] = r.dimW;
    e["eval_iso"] = r.evalIso;
    e["ext"] = r.ext;
    e["pass"] = r.pass;
    unit.push_back(e);
  }
  j["unit"] = unit;
  json counit = json::array();
  for (const auto& r : cert.counit) {
    json e;
    e["simple"] = r.simple;
    e["tensor_dim"] = r.tensorDim;
    e["dim"] = r.dimW;
    e["mult_iso"] = r.multIso;
    e["tor"] = r.tor;
    e["pass"] = r.pass;
    counit.push_back(e);
  }
  j["counit"] = counit;
  json fullness = json::array();
  for (const auto& r : cert.fullness) {
    json e;
    e["from"] = r.from;
    e["to"] = r.to;
    e["ext_b"] = r.extB;
    e["ext_a"] = r.extA;
    e["pass"] = r.pass;
    fullness.push_back(e);
  }
  j["fullness"] = fullness;
  j["verdict"] = cert.pass ? "PASS" : "FAIL";
  return j;
}

void printCertificate(const Pipeline& pl, const EmbeddingCertificate& cert,
                      std::ostream& out) {
  out << "segment " << segmentNames(pl.poset, cert.segment) << " (bound " << cert.bound
      << ")\n";
  out << "  flat_dim: " << dimensionVerdictStr(cert.flatDim) << "\n";
  for (const auto& r : cert.unit)
    out << "  unit " << r.simple << ": hom dim " << r.homDim << " vs dim " << r.dimW
        << ", eval iso " << (r.evalIso ? "yes" : "NO") << ", Ext [" << joinDims(r.ext)
        << "] -> " << (r.pass ? "pass" : "FAIL") << "\n";
  if (!cert.counitRecorded)
    out << "  counit: not recorded (flat dimension not resolved below bound)\n";
  for (const auto& r : cert.counit)
    out << "  counit " << r.simple << ": tensor dim " << r.tensorDim << " vs dim "
        << r.dimW << ", mult iso " << (r.multIso ? "yes" : "NO") << ", Tor ["
        << joinDims(r.tor) << "] -> " << (r.pass ? "pass" : "FAIL") << "\n";
  for (const auto& r : cert.fullness)
    out << "  fullness (" << r.from << ", " << r.to << "): B [" << joinDims(r.extB)
        << "] vs A [" << joinDims(r.extA) << "] -> " << (r.pass ? "pass" : "FAIL")
        << "\n";
  out << "  verdict: " << (cert.pass ? "PASS" : "FAIL") << "\n";
}

int cmdCertify(const Pipeline& pl, const RunConfig& cfg, std::ostream& out,
               std::ostream& err) {
  std::vector<std::vector<int>> segments;
  if (cfg.segmentGiven) {
    auto [seg, widened] = resolveSegment(pl.algebra, pl.poset, cfg.segment);
    if (widened)
      err << "note: segment closed downward to " << segmentNames(pl.poset, seg) << "\n";
    segments.push_back(seg);
  } else {
    segments = initialSegments(pl.poset);
  }
  bool all = true;
  json arr = json::array();
  std::ostringstream text;
  for (const auto& seg : segments) {
    const EmbeddingCertificate cert =
        embeddingCertificate(pl.algebra, pl.poset, seg, cfg.bound);
    all = all && cert.pass;
    if (cfg.json)
      arr.push_back(certificateJson(pl, cert));
    else
      printCertificate(pl, cert, text);
  }
  if (cfg.json) {
    json j = wrap(cfg);
    j["certificates"] = arr;
    j["verdict"] = all ? "PASS" : "FAIL";
    out << j.dump(2) << "\n";
  } else {
    out << configLine(cfg) << "\n" << text.str();
    out << "overall: " << (all ? "PASS" : "FAIL") << "\n";
  }
  return all ? 0 : 1;
}

int cmdReport(const Pipeline& pl, const RunConfig& cfg, std::ostream& out,
              std::ostream& err) {
  (void)err;
  const auto& a = pl.algebra;
  const SimpleList sl = radicalAndSimples(a);
  const StratificationReport hyp = checkHypotheses(a, pl.poset);
  const DimensionVerdict gd = globalDimension(a, cfg.bound);

  json j = wrap(cfg);
  std::ostringstream text;
  text << configLine(cfg) << "\n";
  text << "algebra: dim " << a->dim << " over " << a->field.str() << "\n";
  text << "global dimension: " << dimensionVerdictStr(gd) << "\n";
  text << "radical dim " << sl.radicalBasis.cols() << "; simples:";
  for (const auto& s : sl.simples) text << " " << s.label << "(dim " << s.mod.dim << ")";
  text << "\n";
  printHypotheses(pl, hyp, text);
  if (cfg.json) {
    j["dim"] = a->dim;
    j["field"] = a->field.str();
    j["global_dimension"] = dimensionVerdictStr(gd);
    json hypJ;
    hypJ["welldefined"] = welldefJson(pl, hyp.welldef);
    hypJ["filtrations"] = filtrationsJson(pl, hyp);
    j["hypotheses"] = hypJ;
  }
  if (!hyp.pass) {
    text << "verdict: FAIL (" << hyp.firstFailure << ")\n";
    if (cfg.json) {
      j["verdict"] = "FAIL";
      j["first_failure"] = hyp.firstFailure;
      out << j.dump(2) << "\n";
    } else {
      out << text.str();
    }
    return 1;
  }

  const HeredityChainCertificate chain = heredityChain(a, pl.poset);
  text << "heredity chain: " << chain.steps.size() << " steps, "
       << (chain.pass ? "consistent" : "INCONSISTENT") << "\n";
  json segArr = json::array();
  bool all = chain.pass;
  for (const auto& seg : initialSegments(pl.poset)) {
    const TruncationQuotient tq = truncate(a, pl.poset, seg);
    const DimensionVerdict bgd = globalDimension(tq.table, cfg.bound);
    const EmbeddingCertificate cert = embeddingCertificate(a, pl.poset, seg, cfg.bound);
    all = all && cert.pass;
    // spectral corner over all simple pairs of the quotient
    const SimpleList bsl = radicalAndSimples(tq.table);
    bool spectralPass = true;
    bool collapse = true;
    for (const auto& s : bsl.simples)
      for (const auto& t : bsl.simples) {
        const SpectralReport sr =
            spectralCornerCheck(a, pl.poset, seg, inflate(s.mod, a, tq.proj),
                                inflate(t.mod, a, tq.proj), cfg.bound);
        spectralPass = spectralPass && sr.pass;
        collapse = collapse && sr.collapse;
      }
    all = all && spectralPass;
    text << "segment " << segmentNames(pl.poset, seg) << ": quotient dim "
         << tq.table->dim << ", quotient gd " << dimensionVerdictStr(bgd)
         << ", flat_dim " << dimensionVerdictStr(cert.flatDim) << ", certify "
         << (cert.pass ? "PASS" : "FAIL") << ", spectral "
         << (bsl.simples.empty() ? "n/a" : (spectralPass ? "PASS" : "FAIL"))
         << (collapse ? " (collapse)" : " (euler bound)") << "\n";
    if (cfg.json) {
      json e;
      e["segment"] = segmentJson(pl.poset, seg);
      e["quotient_dim"] = tq.table->dim;
      e["quotient_global_dimension"] = dimensionVerdictStr(bgd);
      e["certificate"] = certificateJson(pl, cert);
      e["spectral_pass"] = spectralPass;
      e["spectral_collapse"] = collapse;
      segArr.push_back(e);
    }
  }
  text << "verdict: " << (all ? "PASS" : "FAIL") << "\n";
  if (cfg.json) {
    json chainJ = json::array();
    for (const auto& s : chain.steps) {
      json e;
      e["vertex"] = pl.poset.elems[s.vertex];
      e["ideal_dim"] = s.idealDim;
      e["multiplicity"] = s.multiplicity;
      e["quotient_dim"] = s.quotient->dim;
      e["prefix_consistent"] = s.prefixConsistent;
      chainJ.push_back(e);
    }
    j["chain"] = chainJ;
    j["segments"] = segArr;
    j["verdict"] = all ? "PASS" : "FAIL";
    out << j.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return all ? 0 : 1;
}

}  // namespace

std::string loadInput(const std::string& input) {
  std::ifstream in(input, std::ios::binary);
  if (in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  // fall back to the bundled corpus, allowing paths like corpus/sl2_z0.strat
  std::string name = input;
  if (auto pos = name.find_last_of('/'); pos != std::string::npos) name = name.substr(pos + 1);
  if (auto pos = name.rfind(".strat"); pos != std::string::npos) name = name.substr(0, pos);
  return corpusFile(name);
}

Pipeline buildPipeline(const std::string& text, const RunConfig& cfg) {
  Pipeline pl;
  std::map<std::string, std::string> overrides;
  for (const auto& [k, v] : cfg.params) overrides[k] = v;
  pl.pres = parsePresentation(text, overrides);
  pl.rs = completeRewriting(pl.pres, cfg.bound);
  pl.algebra = buildAlgebra(pl.rs);
  pl.poset = posetFromPresentation(pl.pres);
  return pl;
}

int runCommand(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    const std::string text = loadInput(cfg.input);
    const Pipeline pl = buildPipeline(text, cfg);
    if (cfg.command == "basis") return cmdBasis(pl, cfg, out);
    if (cfg.command == "peirce") return cmdPeirce(pl, cfg, out);
    if (cfg.command == "simples") return cmdSimples(pl, cfg, out);
    if (cfg.command == "check") return cmdCheck(pl, cfg, out);
    if (cfg.command == "chain") return cmdChain(pl, cfg, out);
    if (cfg.command == "ext") return cmdExt(pl, cfg, out);
    if (cfg.command == "certify") return cmdCertify(pl, cfg, out, err);
    if (cfg.command == "report") return cmdReport(pl, cfg, out, err);
    fail(ErrorKind::Invalid, "unknown command '" + cfg.command + "'");
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::HypothesisViolated) {
      err << "FAIL: " << e.what() << "\n";
      return 1;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace stratkit
