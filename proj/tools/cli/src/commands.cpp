#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "curvlab/curvlab.hpp"
#include "curvlab_cli/suites.hpp"

namespace curvlab::cli {

namespace {

int single(const std::optional<IntRange>& r, const char* flag, int fallback) {
  if (!r) return fallback;
  if (r->lo != r->hi) throw UsageError(std::string("--") + flag + " takes a single value here");
  return r->lo;
}

struct Model {
  CurvatureTensor tensor;
  StructureKind kind;
  Json params;
};

Model build_model(const RunConfig& c) {
  const std::string& name = c.model;
  if (name == "sphere") {
    const int n = single(c.n, "n", 4);
    if (n < 2) throw UsageError("sphere needs n >= 2");
    const double radius = c.radius.value_or(1.0 / std::sqrt(2.0));
    if (!(radius > 0.0)) throw UsageError("--radius must be positive");
    return {sphere(n, radius), StructureKind::generic, {{"n", n}, {"radius", radius}}};
  }
  if (name == "const-hol") {
    const int m = single(c.m, "m", 2);
    if (m < 1) throw UsageError("const-hol needs m >= 1");
    CurvatureTensor t = c.scal ? const_hol(m, *c.scal) : const_hol_shape(m);
    return {std::move(t), StructureKind::kaehler, {{"m", m}, {"scal", scalar(t)}}};
  }
  if (name == "hp") {
    const int m = single(c.m, "m", 2);
    if (m < 2) throw UsageError("hp needs m >= 2");
    return {hp(m), StructureKind::quaternion_kaehler, {{"m", m}}};
  }
  if (name == "wolf") {
    const int m = single(c.m, "m", 2);
    if (m < 2) throw UsageError("wolf needs m >= 2");
    return {wolf(m), StructureKind::quaternion_kaehler, {{"m", m}}};
  }
  if (name == "grassmann") {
    const int p = single(c.p, "p", 2), q = single(c.q, "q", 2);
    if (p < 1 || q < 1) throw UsageError("grassmann needs p, q >= 1");
    return {grassmannian(p, q), StructureKind::generic, {{"p", p}, {"q", q}}};
  }
  throw UsageError("unknown model '" + name + "' (expected sphere|const-hol|hp|wolf|grassmann)");
}

// Structure size for reading an n-dimensional tensor with the given holonomy.
int size_for(StructureKind kind, int n) {
  switch (kind) {
    case StructureKind::kaehler:
      if (n % 2) throw UsageError("kaehler holonomy needs even n");
      return n / 2;
    case StructureKind::quaternion_kaehler:
      if (n % 4 || n < 8) throw UsageError("qk holonomy needs n = 4m with m >= 2");
      return n / 4;
    default:
      return n;
  }
}

CriterionSpec criterion_for(const std::string& choice, StructureKind kind, int size) {
  std::string name = choice;
  if (name == "auto") name = to_string(kind);
  if (name == "weyl" || name == "generic") return CriterionSpec::weyl(size);
  if (name == "kaehler") return CriterionSpec::kaehler(size);
  if (name == "qk") return CriterionSpec::qk(size);
  if (name.rfind("hat=", 0) == 0) {
    const std::string value = name.substr(4);
    const auto slash = value.find('/');
    try {
      std::size_t used = 0;
      const long num = std::stol(value.substr(0, slash), &used);
      if (used != (slash == std::string::npos ? value.size() : slash)) throw UsageError("");
      long den = 1;
      if (slash != std::string::npos) {
        den = std::stol(value.substr(slash + 1), &used);
        if (used != value.size() - slash - 1) throw UsageError("");
      }
      return CriterionSpec::from_hat_constant(num, den);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    } catch (const std::exception&) {
      throw UsageError("invalid criterion '" + choice + "' (expected hat=NUM or hat=NUM/DEN)");
    }
  }
  throw UsageError("unknown criterion '" + choice + "' (expected auto|weyl|kaehler|qk|hat=C)");
}

Json criterion_json(const CriterionSpec& spec, const CriterionResult& r) {
  return {{"k", spec.k}, {"w", spec.w}, {"value", r.value}, {"satisfied", r.satisfied},
          {"strict", r.strict}};
}

}  // namespace

Report run_spectrum(const RunConfig& config) {
  Report r("spectrum");
  const Model model = build_model(config);
  const StructureKind kind = config.holonomy.value_or(model.kind);
  const auto algebra = cached_algebra(kind, size_for(kind, model.tensor.dim()));
  const CurvatureOperator op = to_operator(model.tensor);
  const CurvatureOperator restricted = kind == StructureKind::generic ? op : project(op, *algebra);
  const Vector eig = restricted.spectrum().eigenvalues;

  r.data()["model"] = config.model;
  r.data()["params"] = model.params;
  r.data()["holonomy"] = to_string(kind);
  r.data()["algebra_dim"] = algebra->dim();
  r.data()["off_algebra_mass"] = off_algebra_mass(op.matrix(), *algebra);
  Json values = Json::array();
  for (Eigen::Index i = 0; i < eig.size(); ++i) values.push_back(eig(i));
  r.data()["eigenvalues"] = values;
  r.set_table({"value", "multiplicity"});
  for (const auto& c : cluster_spectrum(eig)) r.add_row({c.value, c.multiplicity});
  return r;
}

Report run_decompose(const RunConfig& config) {
  Report r("decompose");
  if (config.input.empty()) throw UsageError("decompose needs --input FILE");
  const double tol = config.tol_or(1e-10);
  TensorFile file = load_tensor_file(config.input, tol);
  const int n = file.tensor.dim();
  const StructureKind kind = config.holonomy.value_or(file.space.kind());
  const int size = size_for(kind, n);
  const EuclideanSpace space = EuclideanSpace::make(kind, size);
  const CurvatureTensor& rm = file.tensor;
  const CurvatureDecomposition d = decompose(rm, space);
  const auto algebra = cached_algebra(kind, size);

  Json parts = Json::array();
  for (const auto& p : d.parts) {
    const TraceResiduals t = total_traces(p.tensor.tensor(), space);
    Json entry = {{"name", p.name},
                  {"norm_sq", p.tensor.norm_sq()},
                  {"operator_norm_sq", p.tensor.norm_sq() / 4.0},
                  {"scal", scalar(p.tensor)},
                  {"metric_trace", t.metric}};
    if (kind != StructureKind::generic) entry["complex_trace"] = t.complex;
    parts.push_back(entry);
  }
  Json coeffs = Json::object();
  for (const auto& [name, v] : d.coefficients) coeffs[name] = v;

  const CurvatureOperator op = to_operator(rm);
  const CurvatureOperator restricted = kind == StructureKind::generic ? op : project(op, *algebra);
  const auto eig = ascending_eigenvalues(restricted.matrix());
  const CriterionSpec spec = criterion_for(config.criterion, kind, size);

  r.data()["n"] = n;
  r.data()["structure"] = to_string(kind);
  r.data()["norm_sq"] = rm.norm_sq();
  r.data()["coefficients"] = coeffs;
  r.data()["parts"] = parts;
  r.data()["criterion"] = criterion_json(spec, weighted_criterion(eig, spec));
  if (kind == StructureKind::quaternion_kaehler) {
    const double r0 = d.part("hyperkaehler_part").tensor().max_abs();
    r.data()["r0_zero"] = r0 <= 1e-10 * (1.0 + rm.tensor().max_abs());
  }
  const double scale = 1.0 + rm.tensor().max_abs();
  r.check_bound("decompose/sum", {{"n", n}}, (d.sum() - rm).tensor().max_abs() / scale, 1e-9);
  r.check_bound("decompose/orthogonality", {{"n", n}}, d.max_overlap() / (scale * scale), 1e-9);
  return r;
}

Report run_sample(const RunConfig& config) {
  Report r("sample");
  const StructureKind kind = config.holonomy.value_or(StructureKind::generic);
  const int size = kind == StructureKind::generic ? single(config.n, "n", 4) : single(config.m, "m", 2);
  if (kind == StructureKind::generic && size < 2) throw UsageError("--n must be at least 2");
  if (kind == StructureKind::quaternion_kaehler && size < 2) throw UsageError("--m must be at least 2");
  if (kind == StructureKind::kaehler && size < 1) throw UsageError("--m must be at least 1");
  if (config.condition != "none" && config.condition != "two-nonnegative")
    throw UsageError("unknown condition '" + config.condition + "' (expected none|two-nonnegative)");
  const bool filtered = config.condition == "two-nonnegative";
  const int trials = config.trials_or(100);
  const auto space = cached_curvature_space(kind, size);
  const HolonomyAlgebra& algebra = space->algebra();
  const CriterionSpec spec = criterion_for(config.criterion, kind, size);
  const Matrix model = filtered ? positive_model(algebra) : Matrix();

  struct Row {
    double l1 = 0, lmax = 0, s2 = 0, s3 = 0, crit = 0, term = 0, scale = 0, hat = NAN;
    bool satisfied = false, witness = false;
  };
  std::vector<Row> rows(static_cast<std::size_t>(trials));
  parallel_for(rows.size(), [&](std::size_t t) {
    std::mt19937_64 rng(trial_seed(config.seed, t));
    Matrix s = space->sample_restricted(rng);
    if (filtered) {
      std::uniform_real_distribution<double> extra(0.0, 0.25);
      s += two_nonnegative_shift(s, model) * (1.0 + extra(rng)) * model;
    }
    const CurvatureOperator op(s, 1e-10);
    const auto eig = ascending_eigenvalues(op.matrix());
    const double norm = op.matrix().norm();
    Row row;
    row.l1 = eig.front();
    row.lmax = eig.back();
    row.s2 = eig.size() > 1 ? eig[0] + eig[1] : eig[0];
    row.s3 = eig.size() > 2 ? row.s2 + eig[2] : row.s2;
    const CriterionResult c = weighted_criterion(eig, spec);
    row.crit = c.value;
    row.satisfied = c.satisfied;
    row.term = curvature_term_self(op, algebra);
    row.scale = 1.0 + norm * norm * norm;
    row.witness = row.term < -1e-9 * row.scale;
    if (kind == StructureKind::quaternion_kaehler) {
      const QkRatio q = hat_ratio_qk(tensor_from_restricted(op.matrix(), algebra), size);
      if (!q.pure_multiple) row.hat = q.ratio;
    }
    rows[t] = row;
  });

  r.set_table({"trial", "lambda_1", "lambda_max", "sum_2", "sum_3", "criterion_value",
               "criterion_satisfied", "curvature_term", "scale", "witness", "hat_ratio"});
  int witnesses = 0;
  for (std::size_t t = 0; t < rows.size(); ++t) {
    const Row& w = rows[t];
    witnesses += w.witness;
    r.add_row({static_cast<int>(t), w.l1, w.lmax, w.s2, w.s3, w.crit, w.satisfied, w.term, w.scale,
               w.witness, std::isnan(w.hat) ? Json(nullptr) : Json(w.hat)});
  }
  r.data()["holonomy"] = to_string(kind);
  r.data()["size"] = size;
  r.data()["condition"] = config.condition;
  r.data()["criterion"] = {{"k", spec.k}, {"w", spec.w}};
  r.data()["witnesses"] = witnesses;
  if (filtered)
    r.check_bound("sample/nonnegative-term", {{"trials", trials}}, static_cast<double>(witnesses), 0.0);
  return r;
}

std::string run_export(const RunConfig& config) {
  const Model model = build_model(config);
  const StructureKind kind = config.holonomy.value_or(model.kind);
  size_for(kind, model.tensor.dim());
  std::ostringstream out;
  write_tensor_json(out, model.tensor, kind);
  return out.str();
}

}  // namespace curvlab::cli
