#include "lts/commands.hpp"

#include <sstream>

#include "json.hpp"
#include "lts/connectivity.hpp"
#include "lts/decomposition.hpp"
#include "lts/embedding.hpp"
#include "lts/errors.hpp"
#include "lts/io.hpp"

namespace lts {
namespace {

using ojson = nlohmann::ordered_json;

constexpr std::size_t kMaxListedViolations = 20;

ojson vector_json(const Vector& v) {
  ojson out = ojson::array();
  for (const Scalar& s : v) out.push_back(s.to_string());
  return out;
}

ojson subspace_json(const Subspace& s) {
  ojson basis = ojson::array();
  for (std::size_t r = 0; r < s.dim(); ++r) basis.push_back(vector_json(s.basis_vector(r)));
  return ojson{{"dim", s.dim()}, {"basis", basis}};
}

ojson elements_json(const std::vector<GroupElement>& gs) {
  ojson out = ojson::array();
  for (const GroupElement& g : gs) out.push_back(g.to_string());
  return out;
}

ojson violations_json(std::size_t checked, const std::vector<Violation>& vs) {
  ojson list = ojson::array();
  for (std::size_t i = 0; i < vs.size() && i < kMaxListedViolations; ++i) {
    list.push_back(ojson{{"identity", vs[i].identity}, {"indices", vs[i].indices}, {"residual", vector_json(vs[i].residual)}});
  }
  return ojson{{"checked", checked}, {"violation_count", vs.size()}, {"violations", list}, {"holds", vs.empty()}};
}

std::size_t power(std::size_t n, int k) {
  std::size_t r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

ojson witness_json(const ProductWitness& w) {
  ojson args = ojson::array();
  for (const Vector& a : w.args) args.push_back(vector_json(a));
  return ojson{{"slot", w.slot}, {"args", args}, {"product", vector_json(w.product)}};
}

ojson classes_json(const std::vector<ConnectionClass>& classes) {
  ojson out = ojson::array();
  for (const ConnectionClass& c : classes) {
    ojson witnesses = ojson::array();
    for (const auto& [member, seq] : c.witnesses) {
      witnesses.push_back(ojson{{"member", member.to_string()}, {"sequence", elements_json(seq)}});
    }
    out.push_back(ojson{{"representative", c.representative.to_string()},
                        {"members", elements_json(c.members)},
                        {"witnesses", witnesses}});
  }
  return out;
}

ojson embedding_json(const StandardEmbedding& emb, const std::vector<Violation>& grading) {
  ojson comps = ojson::array();
  for (const auto& [g, s] : emb.l0_components()) comps.push_back(ojson{{"degree", g.to_string()}, {"dim", s.dim()}});
  const EmbeddingCertificates& c = emb.certificates();
  return ojson{{"tensor_dim", emb.tensor_dim()},
               {"null_dim", emb.null_space().dim()},
               {"even_dim", emb.even_dim()},
               {"odd_dim", emb.system().dim()},
               {"sigma0", elements_json(emb.support_sigma0())},
               {"even_components", comps},
               {"well_defined", ojson{{"checked", c.well_defined_checks}, {"holds", c.well_defined}}},
               {"leibniz_identity", ojson{{"basis_triples", c.leibniz_triples}, {"holds", c.leibniz}}},
               {"even_sum_direct", c.direct_sum},
               {"even_grading", violations_json(0, grading)}};
}

ojson lemmas_json(const LemmaReport& report) {
  ojson out = ojson::array();
  auto instance = [](const LemmaInstance& i) { return ojson{{"degrees", elements_json(i.degrees)}, {"detail", i.detail}}; };
  for (const LemmaResult& r : report.results) {
    ojson failures = ojson::array();
    for (const LemmaInstance& i : r.failure_examples) failures.push_back(instance(i));
    out.push_back(ojson{{"id", r.id},
                        {"statement", r.statement},
                        {"checked", r.checked},
                        {"nonvacuous", r.nonvacuous},
                        {"failures", r.failures},
                        {"holds", r.failures == 0},
                        {"example", r.example ? instance(*r.example) : ojson(nullptr)},
                        {"failure_examples", failures}});
  }
  return out;
}

ojson decomposition_json(const DecompositionReport& r) {
  ojson ideals = ojson::array();
  for (const ClassIdeal& ci : r.ideals) {
    ideals.push_back(ojson{{"class", ci.cls.representative.to_string()},
                           {"members", elements_json(ci.cls.members)},
                           {"core", subspace_json(ci.core)},
                           {"vertex", subspace_json(ci.vertex)},
                           {"ideal", subspace_json(ci.total)},
                           {"is_subsystem", ci.subsystem},
                           {"is_ideal", ci.ideal}});
  }
  ojson orth = ojson::array();
  for (const OrthogonalityEntry& o : r.orthogonality) {
    orth.push_back(ojson{{"classes", {r.ideals[o.first].cls.representative.to_string(),
                                      r.ideals[o.second].cls.representative.to_string()}},
                         {"products_checked", o.products_checked},
                         {"holds", o.holds},
                         {"witness", o.witness ? witness_json(*o.witness) : ojson(nullptr)}});
  }
  return ojson{{"identity_component", subspace_json(r.identity_component)},
               {"tight_span", subspace_json(r.tight_span)},
               {"U", subspace_json(r.U)},
               {"ideals", ideals},
               {"spans", r.spans},
               {"orthogonality", orth},
               {"tight", r.tight},
               {"annihilator", subspace_json(r.annihilator)},
               {"corollary_applies", r.corollary_applies},
               {"direct_sum", r.direct_sum ? ojson(*r.direct_sum) : ojson(nullptr)},
               {"pairwise_intersections_zero", r.pairwise_intersections_zero}};
}

ojson obstructions_json(const std::vector<Obstruction>& obs, const CommandOptions& options) {
  ojson found = ojson::array();
  for (const Obstruction& o : obs) {
    found.push_back(ojson{{"kind", o.kind},
                          {"detail", o.detail},
                          {"witness", o.witness ? subspace_json(*o.witness) : ojson(nullptr)}});
  }
  return ojson{{"random_probes", options.random_probes},
               {"seed", options.seed},
               {"found", found},
               {"conclusion", obs.empty() ? "no obstruction found" : "not simple"}};
}

const char* command_name(Command c) {
  switch (c) {
    case Command::verify: return "verify";
    case Command::analyze: return "analyze";
    case Command::embed: return "embed";
    case Command::decompose: return "decompose";
  }
  return "?";
}

class Runner {
 public:
  Runner(Command command, const CommandOptions& options) : command_(command), options_(options) {}

  CommandResult run(const std::string& contents, const GradedLTS& e) {
    report_["tool"] = ojson{{"name", kToolName}, {"version", kToolVersion}};
    report_["command"] = command_name(command_);
    report_["input_sha256"] = sha256_hex(contents);
    if (command_ == Command::decompose) report_["seed"] = options_.seed;
    report_["system"] = ojson{{"dimension", e.dim()},
                              {"group", e.group().to_string()},
                              {"field", e.field().describe()},
                              {"nonzero_triples", e.constants().size()}};
    try {
      body(e);
    } catch (const CertificateFailure& err) {
      certify(err.name(), false);
      report_["error"] = ojson{{"certificate", err.name()}, {"detail", err.what()}};
      summary_ << "certificate failure: " << err.what() << "\n";
    }
    bool ok = true;
    ojson failed = ojson::array();
    for (const auto& [name, holds] : certificates_.items()) {
      if (!holds.get<bool>()) {
        ok = false;
        failed.push_back(name);
      }
    }
    report_["certificates"] = certificates_;
    report_["status"] = ok ? "pass" : "fail";
    report_["failed"] = failed;
    summary_ << command_name(command_) << ": " << (ok ? "pass" : "FAIL");
    if (!ok) summary_ << " (" << failed.dump() << ")";
    summary_ << "\n";
    return CommandResult{ok ? kExitPass : kExitCertificateFailure, report_.dump(2) + "\n", summary_.str(), ""};
  }

 private:
  void certify(const std::string& name, bool holds) {
    if (certificates_.contains(name)) holds = holds && certificates_[name].get<bool>();
    certificates_[name] = holds;
  }

  void body(const GradedLTS& e) {
    const std::size_t n = e.dim();
    const auto axioms = verify_lts_axioms(e);
    const auto fundamental = verify_fundamental_identity(e);
    const auto grading = verify_grading(e);
    report_["verification"] = ojson{{"axioms", violations_json(2 * power(n, 5), axioms)},
                                    {"fundamental_identity", violations_json(power(n, 5), fundamental)},
                                    {"grading", violations_json(power(n, 4), grading)}};
    certify("Axioms", axioms.empty());
    certify("FundamentalIdentity", fundamental.empty());
    certify("Grading", grading.empty());
    summary_ << "dimension " << n << " over " << e.field().describe() << ", group " << e.group().to_string() << "\n";
    summary_ << "axioms: " << axioms.size() << " violations; fundamental identity: " << fundamental.size()
             << " violations; grading: " << grading.size() << " violations\n";
    if (!axioms.empty()) summary_ << "first violation: " << axioms.front().to_string() << "\n";
    if (!grading.empty()) summary_ << "first violation: " << grading.front().to_string() << "\n";
    if (command_ == Command::verify) return;
    if (!axioms.empty() || !grading.empty()) {
      summary_ << "skipping later stages: input is not a graded Leibniz triple system\n";
      return;
    }

    const StandardEmbedding emb = StandardEmbedding::build(e);
    const auto l0_grading = verify_l0_grading(emb);
    certify("EmbeddingWellDefined", emb.certificates().well_defined);
    certify("EmbeddingLeibniz", emb.certificates().leibniz);
    certify("EmbeddingGradingDirect", emb.certificates().direct_sum);
    certify("EmbeddingGrading", l0_grading.empty());
    const SupportData sup = SupportData::from(e, emb);
    report_["supports"] = ojson{{"sigma1", elements_json(sup.sigma1)}, {"sigma0", elements_json(sup.sigma0)}};
    summary_ << "Sigma1 = " << elements_json(sup.sigma1).dump() << ", Sigma0 = " << elements_json(sup.sigma0).dump()
             << "\n";

    if (command_ == Command::embed || command_ == Command::decompose) {
      report_["embedding"] = embedding_json(emb, l0_grading);
      summary_ << "standard embedding: dim L0 = " << emb.even_dim() << " (tensor dim " << emb.tensor_dim()
               << ", null space dim " << emb.null_space().dim() << ")\n";
    }
    if (command_ == Command::embed) return;

    const std::vector<ConnectionClass> classes = connection_classes(sup);
    certify("Equivalence", true);
    report_["classes"] = classes_json(classes);
    summary_ << classes.size() << " connection class" << (classes.size() == 1 ? "" : "es") << "\n";
    if (command_ == Command::analyze) return;

    const Subspace j = compute_J(e);
    certify("JVanishing", true);
    const bool lie = is_lie_triple(e);
    certify("LieTripleOracle", true);
    report_["J"] = ojson{{"subspace", subspace_json(j)}, {"lie_triple_system", lie}};

    ObstructionOptions oo{options_.random_probes, options_.seed};
    const DecompositionReport dec = decompose(e, emb, oo);
    for (const ClassIdeal& ci : dec.ideals) certify("ClassIdeal", ci.ideal && ci.subsystem);
    certify("Spanning", dec.spans);
    for (const OrthogonalityEntry& o : dec.orthogonality) certify("Orthogonality", o.holds);
    if (dec.corollary_applies) certify("DirectSum", dec.direct_sum.value_or(false) && dec.pairwise_intersections_zero);
    report_["decomposition"] = decomposition_json(dec);

    const LemmaReport lemmas = verify_structure_lemmas(e, emb, dec.supports, dec.classes);
    certify("StructureLemmas", lemmas.all_hold());
    report_["lemmas"] = lemmas_json(lemmas);
    report_["obstructions"] = obstructions_json(dec.obstructions, options_);

    summary_ << "dim U = " << dec.U.dim() << ", " << dec.ideals.size() << " ideal" << (dec.ideals.size() == 1 ? "" : "s");
    for (const ClassIdeal& ci : dec.ideals) summary_ << " [" << ci.cls.representative.to_string() << ": dim " << ci.total.dim() << "]";
    summary_ << "\ntight: " << (dec.tight ? "yes" : "no") << ", dim Ann = " << dec.annihilator.dim()
             << ", direct sum: " << (dec.direct_sum ? (*dec.direct_sum ? "yes" : "no") : "n/a") << "\n";
    summary_ << "simplicity: " << (dec.obstructions.empty() ? "no obstruction found" : dec.obstructions.front().kind)
             << "\n";
  }

  Command command_;
  CommandOptions options_;
  ojson report_ = ojson::object();
  ojson certificates_ = ojson::object();
  std::ostringstream summary_;
};

}  // namespace

CommandResult run_command(Command command, const std::string& contents, const std::string& source,
                          const CommandOptions& options) {
  std::optional<GradedLTS> e;
  try {
    e = parse_system(contents);
  } catch (const ParseError& err) {
    CommandResult r;
    r.exit_code = kExitInputError;
    r.error = source + ":" + std::to_string(err.line()) + ":" + std::to_string(err.column()) + ": " + err.what();
    return r;
  }
  return Runner(command, options).run(contents, *e);
}

CommandResult run_command_file(Command command, const std::filesystem::path& path, const CommandOptions& options) {
  std::string contents;
  try {
    contents = read_file(path);
  } catch (const ParseError& err) {
    CommandResult r;
    r.exit_code = kExitInputError;
    r.error = err.what();
    return r;
  }
  return run_command(command, contents, path.string(), options);
}

}  // namespace lts
