#include "qdc/presentation.hpp"

#include <stdexcept>

#include "qdc/errors.hpp"

namespace qdc {

std::string pres_name(PresName p) {
  switch (p) {
    case PresName::frt_T: return "frt_T";
    case PresName::swz: return "swz";
    case PresName::lbasis: return "lbasis";
    case PresName::fp: return "fp";
  }
  return "?";
}

PresName pres_from_name(const std::string& s) {
  if (s == "frt_T") return PresName::frt_T;
  if (s == "swz") return PresName::swz;
  if (s == "lbasis") return PresName::lbasis;
  if (s == "fp") return PresName::fp;
  throw std::invalid_argument("unknown presentation: " + s);
}

std::string mutation_name(Mutation m) {
  switch (m) {
    case Mutation::none: return "none";
    case Mutation::kappa_q: return "kappa_q";
    case Mutation::rhat_entry: return "rhat_entry";
    case Mutation::traceless_projector: return "traceless_projector";
    case Mutation::ss4_constant: return "ss4_constant";
    case Mutation::qtrace_weights: return "qtrace_weights";
  }
  return "?";
}

Mutation mutation_from_name(const std::string& s) {
  for (Mutation m : {Mutation::none, Mutation::kappa_q, Mutation::rhat_entry,
                     Mutation::traceless_projector, Mutation::ss4_constant,
                     Mutation::qtrace_weights})
    if (mutation_name(m) == s) return m;
  throw std::invalid_argument("unknown mutation: " + s);
}

ScalarMatrix context_rhat(int N, const BuildOptions& opt) {
  ScalarMatrix r = build_rhat(N, opt.convention);
  if (opt.mutation == Mutation::rhat_entry) {
    if (N < 2) throw DimensionError("rhat_entry mutation needs N >= 2");
    // Zero the first +/-lambda entry; the result is no longer Hecke. The
    // lambda block sits on the (1,2) diagonal position for the standard
    // solution and on (2,1) for its inverse.
    int pos = opt.convention == Convention::standard ? 0 * N + 1 : 1 * N + 0;
    r.set(pos, pos, Scalar::zero(N));
  }
  return r;
}

std::vector<Scalar> context_weights(int N, const BuildOptions& opt) {
  std::vector<Scalar> w = qtrace_weights(N);
  if (opt.mutation == Mutation::qtrace_weights) w[0] = w[0] * Scalar::q(N);
  return w;
}

Scalar context_kappa(int N, const BuildOptions& opt) {
  Scalar k = Scalar::kappa_q(N);
  if (opt.mutation == Mutation::kappa_q) k = k * Scalar::q(N);
  return k;
}

PolyMatrix traceless_projection(const PolyMatrix& m, const BuildOptions& opt) {
  int N = m.rows();
  Polynomial tr = qtrace(m, context_weights(N, opt));
  Scalar coeff = Scalar::n_q(N).inverse();
  if (opt.mutation == Mutation::traceless_projector) coeff = coeff * Scalar::q(N);
  PolyMatrix out = m;
  for (int i = 0; i < N; ++i) out.at(i, i) = out.at(i, i) - coeff * tr;
  return out;
}

PolyMatrix omega_tilde_lbasis(int N, const BuildOptions& opt) {
  return traceless_projection(PolyMatrix::generators(Kind::OmL, N), opt);
}

PolyMatrix omega_tilde_fp(int N, const BuildOptions& opt) {
  PolyMatrix m = PolyMatrix::generators(Kind::OmT, N);
  // Tr_q = 0 eliminates the (N, N) entry:
  // OmT[N,N] = -(1/w_N) sum_{i<N} w_i OmT[i,i].
  std::vector<Scalar> w = context_weights(N, opt);
  Polynomial nn(N);
  Scalar inv = -(w[static_cast<std::size_t>(N - 1)].inverse());
  for (int i = 0; i < N - 1; ++i)
    nn = nn + (inv * w[static_cast<std::size_t>(i)]) *
                  Polynomial::generator(Gen{Kind::OmT, i + 1, i + 1}, N);
  m.at(N - 1, N - 1) = nn;
  return m;
}

Polynomial tr_q_omL(int N, const BuildOptions& opt) {
  return qtrace(PolyMatrix::generators(Kind::OmL, N), context_weights(N, opt));
}

PolyMatrix wl_matrix(int N) {
  PolyMatrix l = PolyMatrix::generators(Kind::L, N);
  PolyMatrix om = PolyMatrix::generators(Kind::Om, N);
  PolyMatrix im = PolyMatrix::generators(Kind::Im, N);
  return l - (l * om * im).scaled(Scalar::lambda(N));
}

PolyMatrix omega_x_matrix(int N) {
  PolyMatrix om = PolyMatrix::generators(Kind::Om, N);
  return om + (om * wl_matrix(N)).scaled(Scalar::x(N));
}

Polynomial xi_x(int N, const BuildOptions& opt) {
  Scalar pref = Scalar::q_pow(N, N) / Scalar::lambda(N);
  return pref * qtrace(omega_x_matrix(N), context_weights(N, opt));
}

PolyMatrix w_matrix(int N) {
  PolyMatrix oml = PolyMatrix::generators(Kind::OmL, N);
  PolyMatrix iml = PolyMatrix::generators(Kind::ImL, N);
  return PolyMatrix::identity(N, N) - (oml * iml).scaled(Scalar::lambda(N));
}

PolyMatrix wbar_matrix(int N) {
  PolyMatrix oml = PolyMatrix::generators(Kind::OmL, N);
  PolyMatrix iml = PolyMatrix::generators(Kind::ImL, N);
  return PolyMatrix::identity(N, N) - (iml * oml).scaled(Scalar::lambda(N));
}

Polynomial det_q_T(int N) { return qdet(PolyMatrix::generators(Kind::T, N)); }

DefinedSymbols defined_symbols(int N, const BuildOptions& opt) {
  return DefinedSymbols{omega_tilde_lbasis(N, opt), wl_matrix(N), omega_x_matrix(N),
                        xi_x(N, opt),              w_matrix(N),  wbar_matrix(N),
                        tr_q_omL(N, opt),          det_q_T(N)};
}

namespace {

void check_deadline(const BuildOptions& opt) {
  if (opt.deadline && std::chrono::steady_clock::now() > *opt.deadline)
    throw BudgetExceeded("presentation construction: time budget exhausted");
}

std::vector<Polynomial> components_of(const PolyMatrix& m) {
  std::vector<Polynomial> out;
  out.reserve(static_cast<std::size_t>(m.rows()) * static_cast<std::size_t>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (!m.at(i, j).is_zero()) out.push_back(m.at(i, j));
  return out;
}

struct Builder {
  int N;
  const BuildOptions& opt;
  PolyMatrix R, Ri;
  std::vector<std::pair<std::string, std::vector<Polynomial>>> families;

  Builder(int N_, const BuildOptions& o)
      : N(N_), opt(o), R(lift(context_rhat(N_, o))), Ri(lift(rhat_inverse(context_rhat(N_, o)))) {}

  void family(const std::string& tag, const PolyMatrix& residual) {
    check_deadline(opt);
    families.push_back({tag, components_of(residual)});
  }

  PolyMatrix gens1(Kind k) const { return embed1(PolyMatrix::generators(k, N)); }
  PolyMatrix gens2(Kind k) const { return embed2(PolyMatrix::generators(k, N)); }

  // R T1 T2 - T1 T2 R
  void add_tt(const std::string& tag) {
    PolyMatrix t1 = gens1(Kind::T), t2 = gens2(Kind::T);
    family(tag, R * t1 * t2 - t1 * t2 * R);
  }
  // c T1 L2 - R L1 R T1
  void add_tl(const std::string& tag, const Scalar& c) {
    PolyMatrix t1 = gens1(Kind::T), l2 = gens2(Kind::L), l1 = gens1(Kind::L);
    family(tag, (t1 * l2).scaled(c) - R * l1 * R * t1);
  }
  // T1 F2 - A F1 B T1 for a form/derivation kind F
  void add_tf(const std::string& tag, const PolyMatrix& f1, const PolyMatrix& f2,
              const PolyMatrix& a, const PolyMatrix& b) {
    PolyMatrix t1 = gens1(Kind::T);
    family(tag, t1 * f2 - a * f1 * b * t1);
  }
  // R L1 R F1 - F1 R L1 R
  void add_lf(const std::string& tag, const PolyMatrix& f1) {
    PolyMatrix l1 = gens1(Kind::L);
    family(tag, R * l1 * R * f1 - f1 * R * l1 * R);
  }
  // R L1 R L1 - L1 R L1 R
  void add_ll(const std::string& tag) {
    PolyMatrix l1 = gens1(Kind::L);
    family(tag, R * l1 * R * l1 - l1 * R * l1 * R);
  }
};

void append_generators(std::vector<Gen>& gens, Kind k, int N, int skip_row = -1,
                       int skip_col = -1) {
  for (int i = 1; i <= N; ++i)
    for (int j = 1; j <= N; ++j)
      if (i != skip_row || j != skip_col) gens.push_back(Gen{k, i, j});
}

}  // namespace

Presentation make_presentation(PresName name, int N, const BuildOptions& opt) {
  if (N < 1) throw DimensionError("presentation requires N >= 1");
  if (name != PresName::frt_T && N < 2)
    throw DimensionError("differential presentations require N >= 2");

  Builder b(N, opt);

  switch (name) {
    case PresName::frt_T: {
      b.add_tt("eq-zum-TT");
      break;
    }
    case PresName::swz: {
      PolyMatrix om1 = b.gens1(Kind::Om), om2 = b.gens2(Kind::Om);
      PolyMatrix im1 = b.gens1(Kind::Im), im2 = b.gens2(Kind::Im);
      b.add_tt("eq-zum-TT");
      b.add_tl("eq-zum-TL", Scalar::one(N));
      b.add_tf("eq-zum-TOm", om1, om2, b.Ri, b.Ri);
      b.family("eq-zum-OmOm", b.Ri * om1 * b.Ri * om1 + om1 * b.Ri * om1 * b.R);
      b.add_ll("eq-zum-LL");
      b.add_lf("eq-zum-LOm", om1);
      b.add_tf("eq-861-TIm", im1, im2, b.R, b.R);
      b.family("eq-861-ImOm", im1 * b.Ri * om1 * b.Ri + b.Ri * om1 * b.Ri * im1 + b.Ri);
      b.add_lf("eq-861-LIm", im1);
      b.family("eq-861-ImIm", b.R * im1 * b.R * im1 + im1 * b.R * im1 * b.Ri);
      break;
    }
    case PresName::lbasis: {
      PolyMatrix om1 = b.gens1(Kind::OmL), om2 = b.gens2(Kind::OmL);
      PolyMatrix im1 = b.gens1(Kind::ImL), im2 = b.gens2(Kind::ImL);
      b.add_tt("eq-s2-TT");
      b.add_tl("eq-s2-TL", Scalar::p_pow(2, N));  // q^(2/N) = p^2
      b.add_tf("eq-s2-TOmL", om1, om2, b.R, b.Ri);
      b.family("eq-s2-OmLOmL", b.R * om1 * b.R * om1 + om1 * b.R * om1 * b.Ri);
      b.add_ll("eq-s2-LL");
      b.add_lf("eq-s2-LOmL", om1);
      b.add_tf("eq-s3-TImL", im1, im2, b.R, b.Ri);
      b.family("eq-s3-ImLImL", b.R * im1 * b.Ri * im1 + im1 * b.Ri * im1 * b.Ri);
      b.add_lf("eq-s3-LImL", im1);
      b.family("eq-ss3", im1 * b.Ri * om1 * b.R + b.R * om1 * b.Ri * im1 + b.R);
      break;
    }
    case PresName::fp: {
      PolyMatrix ot = omega_tilde_fp(N, opt);
      PolyMatrix ot1 = embed1(ot), ot2 = embed2(ot);
      PolyMatrix im1 = b.gens1(Kind::ImL), im2 = b.gens2(Kind::ImL);
      b.add_tt("eq-s2p-TT");
      b.add_tl("eq-s2p-TL", Scalar::p_pow(2, N));
      b.add_tf("eq-s2p-TOmT", ot1, ot2, b.R, b.Ri);
      b.add_ll("eq-s2p-LL");
      b.add_lf("eq-s2p-LOmT", ot1);
      {
        // R Om1 R Om1 + Om1 R Om1 R^-1 = kappa (Om^2)_1 + kappa R (Om^2)_1 R
        PolyMatrix sq1 = embed1(ot * ot);
        Scalar kappa = context_kappa(N, opt);
        b.family("eq-s2pp", b.R * ot1 * b.R * ot1 + ot1 * b.R * ot1 * b.Ri -
                                sq1.scaled(kappa) - (b.R * sq1 * b.R).scaled(kappa));
      }
      b.add_tf("eq-s3-TImL", im1, im2, b.R, b.Ri);
      b.family("eq-s3-ImLImL", b.R * im1 * b.Ri * im1 + im1 * b.Ri * im1 * b.Ri);
      b.add_lf("eq-s3-LImL", im1);
      {
        Scalar kappa = context_kappa(N, opt);
        Scalar c = kappa / (Scalar::lambda(N) * (Scalar::one(N) - kappa));
        if (opt.mutation == Mutation::ss4_constant) c = c * Scalar::q(N);
        PolyMatrix rhs = PolyMatrix::identity(N * N, N).scaled(c) - b.R;
        b.family("eq-ss4", im1 * b.Ri * ot1 * b.R + b.R * ot1 * b.Ri * im1 - rhs);
      }
      break;
    }
  }

  Presentation pres(name, N, opt, N);
  switch (name) {
    case PresName::frt_T:
      append_generators(pres.generators, Kind::T, N);
      break;
    case PresName::swz:
      append_generators(pres.generators, Kind::T, N);
      append_generators(pres.generators, Kind::L, N);
      append_generators(pres.generators, Kind::Om, N);
      append_generators(pres.generators, Kind::Im, N);
      break;
    case PresName::lbasis:
      append_generators(pres.generators, Kind::T, N);
      append_generators(pres.generators, Kind::L, N);
      append_generators(pres.generators, Kind::OmL, N);
      append_generators(pres.generators, Kind::ImL, N);
      break;
    case PresName::fp:
      append_generators(pres.generators, Kind::T, N);
      append_generators(pres.generators, Kind::L, N);
      append_generators(pres.generators, Kind::OmT, N, N, N);
      append_generators(pres.generators, Kind::ImL, N);
      break;
  }

  for (auto& [tag, comps] : b.families) {
    check_deadline(opt);
    OrientResult orient = orient_relations(comps, N, tag);
    RelationFamily fam;
    fam.tag = tag;
    fam.components = std::move(comps);
    fam.rank = static_cast<int>(orient.rules.size());
    for (auto& rule : orient.rules) pres.rules.add(std::move(rule));
    pres.families.push_back(std::move(fam));
  }
  return pres;
}

}  // namespace qdc
