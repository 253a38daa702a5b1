#include "cohom/forms.hpp"

#include <algorithm>
#include <cmath>

#include "cohom/errors.hpp"

namespace cohom {

DifferentialForm::DifferentialForm(TensorParams params, int degree, Window window)
    : params_(std::move(params)), degree_(degree), window_(std::move(window)) {
  if (degree_ < 0 || degree_ > params_.d())
    throw Error(ErrorCode::BadInput, "form degree must lie in 0..d");
  if (window_.d() != params_.d())
    throw Error(ErrorCode::BadInput, "form window rank must match factor count");
}

void DifferentialForm::validate_axes(const std::vector<int>& axes) const {
  if (static_cast<int>(axes.size()) != degree_)
    throw Error(ErrorCode::BadInput, "component multi-index size must equal the degree");
  for (std::size_t i = 0; i < axes.size(); ++i) {
    if (axes[i] < 1 || axes[i] > d())
      throw Error(ErrorCode::BadInput, "component axis out of range");
    if (i && axes[i] <= axes[i - 1])
      throw Error(ErrorCode::BadInput, "component multi-index must increase strictly");
  }
}

bool DifferentialForm::has_component(const std::vector<int>& axes) const {
  return comps_.count(axes) > 0;
}

CoeffTensor DifferentialForm::component(const std::vector<int>& axes) const {
  validate_axes(axes);
  auto it = comps_.find(axes);
  if (it != comps_.end()) return it->second;
  return CoeffTensor(params_, window_);
}

void DifferentialForm::set_component(const std::vector<int>& axes, CoeffTensor value) {
  validate_axes(axes);
  if (!(value.params().factors == params_.factors))
    throw Error(ErrorCode::BadInput, "component parameters must match the form");
  if (!(value.window() == window_)) {
    if (!(Window::hull(window_, value.window()) == window_))
      throw Error(ErrorCode::BadInput, "component window exceeds the form window");
    value = value.embedded(window_);
  }
  comps_.insert_or_assign(axes, std::move(value));
}

std::vector<std::vector<int>> increasing_multi_indices(int d, int n) {
  std::vector<std::vector<int>> out;
  if (n < 0 || n > d) return out;
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i + 1;
  for (;;) {
    out.push_back(idx);
    int j = n - 1;
    for (; j >= 0; --j) {
      if (idx[static_cast<std::size_t>(j)] < d - (n - 1 - j)) break;
    }
    if (j < 0) break;
    ++idx[static_cast<std::size_t>(j)];
    for (int t = j + 1; t < n; ++t)
      idx[static_cast<std::size_t>(t)] = idx[static_cast<std::size_t>(t - 1)] + 1;
  }
  if (n == 0) out = {{}};
  return out;
}

double form_norm0(const DifferentialForm& w) {
  double sum = 0.0;
  for (const auto& [axes, t] : w.components()) {
    double n = norm0(t);
    sum += n * n;
  }
  return std::sqrt(sum);
}

DifferentialForm form_add(const DifferentialForm& a, const DifferentialForm& b) {
  if (a.degree() != b.degree() || !(a.params().factors == b.params().factors))
    throw Error(ErrorCode::BadInput, "form_add: mismatched forms");
  Window w = Window::hull(a.window(), b.window());
  DifferentialForm out(a.params(), a.degree(), w);
  for (const auto& I : increasing_multi_indices(a.d(), a.degree())) {
    if (!a.has_component(I) && !b.has_component(I)) continue;
    out.set_component(I, (a.component(I) + b.component(I)).embedded(w));
  }
  return out;
}

DifferentialForm form_scale(Complex s, const DifferentialForm& a) {
  DifferentialForm out(a.params(), a.degree(), a.window());
  for (const auto& [axes, t] : a.components()) out.set_component(axes, s * t);
  return out;
}

namespace {

Window expanded_window(const TensorParams& params, Window w) {
  for (int a = 0; a < params.d(); ++a) {
    const IrrepParams& p = params.factors[static_cast<std::size_t>(a)];
    AxisWindow& ax = w.axes[static_cast<std::size_t>(a)];
    ax.hi += 1;
    ax.lo = p.discrete() ? std::max<long long>(ax.lo - 1, p.n) : ax.lo - 1;
  }
  return w;
}

}  // namespace

DifferentialForm exterior_derivative(const DifferentialForm& w) {
  if (w.degree() >= w.d())
    throw Error(ErrorCode::TopDegreeInput, "exterior derivative of a top-degree form");
  Window out_w = expanded_window(w.params(), w.window());
  DifferentialForm out(w.params(), w.degree() + 1, out_w);
  for (const auto& I : increasing_multi_indices(w.d(), w.degree() + 1)) {
    CoeffTensor acc(w.params(), out_w);
    bool any = false;
    for (std::size_t j = 0; j < I.size(); ++j) {
      std::vector<int> Ij;
      for (std::size_t t = 0; t < I.size(); ++t)
        if (t != j) Ij.push_back(I[t]);
      if (!w.has_component(Ij)) continue;
      any = true;
      CoeffTensor term = apply_X(w.component(Ij), I[j]);
      double sign = (j % 2 == 0) ? 1.0 : -1.0;
      acc = acc + Complex(sign, 0.0) * term;
    }
    if (any) out.set_component(I, acc.embedded(out_w));
  }
  return out;
}

DifferentialForm drop_axis_components(const DifferentialForm& w, int m) {
  DifferentialForm out(w.params(), w.degree(), w.window());
  for (const auto& [axes, t] : w.components()) {
    if (std::find(axes.begin(), axes.end(), m) != axes.end()) continue;
    out.set_component(axes, t);
  }
  return out;
}

DifferentialForm restrict_form(const DifferentialForm& w, int m, long long k) {
  if (m < 1 || m > w.d())
    throw Error(ErrorCode::BadInput, "restrict_form: axis out of range");
  for (const auto& [axes, t] : w.components())
    if (std::find(axes.begin(), axes.end(), m) != axes.end())
      throw Error(ErrorCode::AxisInIndex,
                  "restrict_form: a component still carries the dropped axis");
  TensorParams sub;
  Window sub_w;
  for (int a = 1; a <= w.d(); ++a) {
    if (a == m) continue;
    sub.factors.push_back(w.params().factor(a));
    sub_w.axes.push_back(w.window().axes[static_cast<std::size_t>(a - 1)]);
  }
  DifferentialForm out(sub, w.degree(), sub_w);
  for (const auto& [axes, t] : w.components()) {
    std::vector<int> renumbered;
    for (int a : axes) renumbered.push_back(a < m ? a : a - 1);
    out.set_component(renumbered, project(t, {{m, k}}));
  }
  return out;
}

ClosedCheck check_closed(const DifferentialForm& w, double tol) {
  if (w.degree() == w.d()) return {true, 0.0};  // top degree: vacuously closed
  double res = form_norm0(exterior_derivative(w));
  double scale = form_norm0(w);
  return {res <= tol * scale || scale == 0.0, res};
}

double primitive_residual(const DifferentialForm& omega, const DifferentialForm& eta) {
  DifferentialForm deta = exterior_derivative(eta);
  DifferentialForm diff = form_add(deta, form_scale(Complex(-1.0, 0.0), omega));
  Window interior = omega.window().interior(omega.params(), 1);
  for (const auto& ax : interior.axes)
    if (ax.width() < 1) return 0.0;
  double sum = 0.0;
  for (const auto& [axes, t] : diff.components()) {
    double n = norm0(t.restricted(interior));
    sum += n * n;
  }
  return std::sqrt(sum);
}

namespace {

// Internal working representation for the recursion: components of a
// degree-n form over a generator subset, keyed by ascending axis lists;
// every tensor lives on the full factor space over a shared window. Axes
// outside `gens` are inert multiplicity directions.
struct GenForm {
  int degree = 0;
  Window window;
  std::map<std::vector<int>, CoeffTensor> comps;

  CoeffTensor component(const TensorParams& tp, const std::vector<int>& axes) const {
    auto it = comps.find(axes);
    if (it != comps.end()) return it->second;
    return CoeffTensor(tp, window);
  }
};

std::vector<std::vector<int>> subsets_of(const std::vector<int>& gens, int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  int g = static_cast<int>(gens.size());
  for (const auto& pos : increasing_multi_indices(g, n)) {
    std::vector<int> axes;
    for (int p : pos) axes.push_back(gens[static_cast<std::size_t>(p - 1)]);
    out.push_back(std::move(axes));
  }
  return out;
}

Window expand_axes(const TensorParams& tp, Window w, const std::vector<int>& gens) {
  for (int a : gens) {
    const IrrepParams& p = tp.factor(a);
    AxisWindow& ax = w.axes[static_cast<std::size_t>(a - 1)];
    ax.hi += 1;
    ax.lo = p.discrete() ? std::max<long long>(ax.lo - 1, p.n) : ax.lo - 1;
  }
  return w;
}

GenForm gen_derivative(const TensorParams& tp, const GenForm& w,
                       const std::vector<int>& gens) {
  GenForm out;
  out.degree = w.degree + 1;
  out.window = expand_axes(tp, w.window, gens);
  for (const auto& I : subsets_of(gens, w.degree + 1)) {
    CoeffTensor acc(tp, out.window);
    bool any = false;
    for (std::size_t j = 0; j < I.size(); ++j) {
      std::vector<int> Ij;
      for (std::size_t t = 0; t < I.size(); ++t)
        if (t != j) Ij.push_back(I[t]);
      auto it = w.comps.find(Ij);
      if (it == w.comps.end()) continue;
      any = true;
      double sign = (j % 2 == 0) ? 1.0 : -1.0;
      acc = acc + Complex(sign, 0.0) * apply_X(it->second, I[j]);
    }
    if (any) out.comps.emplace(I, acc.embedded(out.window));
  }
  return out;
}

GenForm gen_add(const TensorParams& tp, const GenForm& a, const GenForm& b,
                Complex sb = Complex(1.0, 0.0)) {
  GenForm out;
  out.degree = a.degree;
  out.window = Window::hull(a.window, b.window);
  std::map<std::vector<int>, char> keys;
  for (const auto& [k, t] : a.comps) keys[k] = 1;
  for (const auto& [k, t] : b.comps) keys[k] = 1;
  for (const auto& [k, unused] : keys)
    out.comps.emplace(k, (a.component(tp, k) + sb * b.component(tp, k))
                             .embedded(out.window));
  return out;
}

// Primitive of a closed degree-n form over the generator subset `gens`
// (1 <= n <= |gens|); other axes are passengers. Top degree solves the
// coboundary system fiberwise; degree 1 averages the d one-sided primitives
// (each is a full primitive there); in between, the leading generator is
// swept out: eta1 handles the components missing it, and the remainder
// omega - d eta1, contracted along the swept generator, is a closed
// (n-1)-form over the other generators whose primitive supplies the
// m-containing components with a sign flip.
GenForm solve_prim_gen(const TensorParams& tp, const GenForm& w,
                       std::vector<int> gens, const PrimitiveOptions& opts,
                       double scale) {
  int g = static_cast<int>(gens.size());
  int n = w.degree;
  GenForm out;
  out.degree = n - 1;
  out.window = w.window;

  if (n == g) {
    CoeffTensor datum = w.component(tp, gens);
    if (norm0(datum) == 0.0) return out;
    TopOptions topts;
    topts.tol = opts.tol;
    topts.backend = opts.backend;
    topts.split_ratio = opts.split_ratio;
    topts.threads = 1;
    topts.defect_scale = scale;
    std::vector<CoeffTensor> gsol = solve_top_axes(datum, gens, topts);
    for (int j = 1; j <= g; ++j) {
      std::vector<int> Ij;
      for (int t = 1; t <= g; ++t)
        if (t != j) Ij.push_back(gens[static_cast<std::size_t>(t - 1)]);
      double sign = (j % 2 == 1) ? 1.0 : -1.0;
      out.comps.emplace(Ij, Complex(sign, 0.0) * gsol[static_cast<std::size_t>(j - 1)]);
    }
    return out;
  }

  if (n == 1) {
    // each one-sided primitive solves every component (closedness plus the
    // absence of invariant vectors); average them
    for (int m : gens) {
      std::vector<int> rest;
      for (int a : gens)
        if (a != m) rest.push_back(a);
      GenForm wm;
      wm.degree = n;
      wm.window = w.window;
      for (const auto& [axes, t] : w.comps)
        if (std::find(axes.begin(), axes.end(), m) == axes.end())
          wm.comps.emplace(axes, t);
      GenForm eta_m = solve_prim_gen(tp, wm, rest, opts, scale);
      out = gen_add(tp, out, eta_m);
    }
    double weight = 1.0 / static_cast<double>(g);
    GenForm scaled;
    scaled.degree = out.degree;
    scaled.window = out.window;
    for (const auto& [axes, t] : out.comps)
      scaled.comps.emplace(axes, Complex(weight, 0.0) * t);
    return scaled;
  }

  // sweep the leading generator
  int m = gens.front();
  std::vector<int> rest(gens.begin() + 1, gens.end());

  GenForm wm;
  wm.degree = n;
  wm.window = w.window;
  for (const auto& [axes, t] : w.comps)
    if (std::find(axes.begin(), axes.end(), m) == axes.end())
      wm.comps.emplace(axes, t);
  GenForm eta1 = solve_prim_gen(tp, wm, rest, opts, scale);

  GenForm deta1 = gen_derivative(tp, eta1, gens);
  GenForm rem = gen_add(tp, w, deta1, Complex(-1.0, 0.0));  // omega - d eta1

  // contraction along m: psi(J) = rem(m, J), a closed (n-1)-form over rest
  GenForm psi;
  psi.degree = n - 1;
  psi.window = rem.window;
  for (const auto& [axes, t] : rem.comps) {
    if (axes.empty() || axes.front() != m) continue;  // m is minimal in gens
    std::vector<int> J(axes.begin() + 1, axes.end());
    psi.comps.emplace(J, Complex(-1.0, 0.0) * t);  // sigma solves d'sigma = -psi
  }
  GenForm sigma = solve_prim_gen(tp, psi, rest, opts, scale);

  // eta = eta1 + zeta with zeta(m, K) := sigma(K)
  GenForm zeta;
  zeta.degree = n - 1;
  zeta.window = sigma.window;
  for (const auto& [axes, t] : sigma.comps) {
    std::vector<int> key;
    key.push_back(m);
    key.insert(key.end(), axes.begin(), axes.end());
    zeta.comps.emplace(std::move(key), t);
  }
  return gen_add(tp, eta1, zeta);
}

}  // namespace

PrimitiveResult solve_primitive(const DifferentialForm& w, const PrimitiveOptions& opts) {
  int d = w.d();
  int n = w.degree();
  if (n < 1 || n > d - 1)
    throw Error(ErrorCode::BadInput,
                "solve_primitive: degree must lie in 1..d-1 (top degree is solve_top)");
  ClosedCheck cc = check_closed(w, opts.tol);
  if (!cc.closed)
    throw Error(ErrorCode::NotClosed, "input form is not closed within tolerance");

  double scale = form_norm0(w);
  std::vector<int> gens;
  for (int a = 1; a <= d; ++a) gens.push_back(a);
  GenForm in;
  in.degree = n;
  in.window = w.window();
  for (const auto& [axes, t] : w.components()) in.comps.emplace(axes, t);

  std::vector<std::pair<std::string, double>> stages;
  GenForm eta_gen;
  if (n == 1) {
    // each one-sided primitive is itself a full primitive at degree 1;
    // average them and report their individual residuals
    GenForm acc;
    acc.degree = 0;
    acc.window = in.window;
    for (int m = 1; m <= d; ++m) {
      GenForm wm;
      wm.degree = n;
      wm.window = in.window;
      for (const auto& [axes, t] : in.comps)
        if (std::find(axes.begin(), axes.end(), m) == axes.end())
          wm.comps.emplace(axes, t);
      std::vector<int> rest;
      for (int a = 1; a <= d; ++a)
        if (a != m) rest.push_back(a);
      GenForm eta_m = solve_prim_gen(w.params(), wm, rest, opts, scale);
      DifferentialForm em(w.params(), 0, eta_m.window);
      for (const auto& [axes, t] : eta_m.comps) em.set_component(axes, t);
      stages.push_back({"m=" + std::to_string(m), primitive_residual(w, em)});
      acc = gen_add(w.params(), acc, eta_m);
    }
    eta_gen.degree = 0;
    eta_gen.window = acc.window;
    for (const auto& [axes, t] : acc.comps)
      eta_gen.comps.emplace(axes, Complex(1.0 / d, 0.0) * t);
  } else {
    eta_gen = solve_prim_gen(w.params(), in, gens, opts, scale);
  }

  DifferentialForm eta(w.params(), n - 1, eta_gen.window);
  for (const auto& [axes, t] : eta_gen.comps) eta.set_component(axes, t);
  double res = primitive_residual(w, eta);
  return PrimitiveResult{std::move(eta), std::move(stages), res};
}

}  // namespace cohom
