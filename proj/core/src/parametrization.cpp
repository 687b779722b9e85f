#include "br/parametrization.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace br {

void Parametrization::check() const {
  if (source_dim <= 0 || image_dim <= 0)
    throw std::invalid_argument("parametrization: dimensions must be positive");
  if (!eval || !jacobian)
    throw std::invalid_argument("parametrization: eval and jacobian must be set");
}

Parametrization twisted_cubic() {
  Parametrization g;
  g.name = "twisted-cubic";
  g.source_dim = 2;
  g.image_dim = 4;
  g.cone = true;
  g.eval = [](const CVec& y) {
    const Cplx s = y[0], t = y[1];
    CVec x(4);
    x << s * s * s, s * s * t, s * t * t, t * t * t;
    return x;
  };
  g.jacobian = [](const CVec& y) {
    const Cplx s = y[0], t = y[1];
    CMat j(4, 2);
    j << 3.0 * s * s, Cplx(0), //
        2.0 * s * t, s * s,    //
        t * t, 2.0 * s * t,    //
        Cplx(0), 3.0 * t * t;
    return j;
  };
  return g;
}

Parametrization x2_quartic() {
  Parametrization g;
  g.name = "x2-quartic";
  g.source_dim = 2;
  g.image_dim = 4;
  g.cone = true;
  g.eval = [](const CVec& y) {
    const Cplx s = y[0], t = y[1];
    CVec x(4);
    x << s * s * s * s, s * s * s * t, s * t * t * t, t * t * t * t;
    return x;
  };
  g.jacobian = [](const CVec& y) {
    const Cplx s = y[0], t = y[1];
    CMat j(4, 2);
    j << 4.0 * s * s * s, Cplx(0),   //
        3.0 * s * s * t, s * s * s,  //
        t * t * t, 3.0 * s * t * t,  //
        Cplx(0), 4.0 * t * t * t;
    return j;
  };
  return g;
}

Parametrization circle() {
  Parametrization g;
  g.name = "circle";
  g.source_dim = 1;
  g.image_dim = 2;
  g.cone = false;
  g.eval = [](const CVec& y) {
    const Cplx t = y[0];
    const Cplx den = 1.0 + t * t;
    CVec x(2);
    x << (1.0 - t * t) / den, 2.0 * t / den;
    return x;
  };
  g.jacobian = [](const CVec& y) {
    const Cplx t = y[0];
    const Cplx den = 1.0 + t * t;
    const Cplx den2 = den * den;
    CMat j(2, 1);
    j << -4.0 * t / den2, (2.0 - 2.0 * t * t) / den2;
    return j;
  };
  return g;
}

Parametrization segre_sigma(int r, int a, int b, int c) {
  if (r <= 0 || a <= 0 || b <= 0 || c <= 0)
    throw std::invalid_argument("segre_sigma: r, a, b, c must be positive");
  Parametrization g;
  {
    std::ostringstream name;
    name << "sigma:" << r << ":" << a << "," << b << "," << c;
    g.name = name.str();
  }
  const int block = a + b + c;
  g.source_dim = r * block;
  g.image_dim = a * b * c;
  g.cone = true;
  g.eval = [r, a, b, c, block](const CVec& y) {
    CVec x = CVec::Zero(a * b * c);
    for (int t = 0; t < r; ++t) {
      const int off = t * block;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) {
          const Cplx uv = y[off + i] * y[off + a + j];
          for (int k = 0; k < c; ++k) x[(i * b + j) * c + k] += uv * y[off + a + b + k];
        }
    }
    return x;
  };
  g.jacobian = [r, a, b, c, block](const CVec& y) {
    CMat jac = CMat::Zero(a * b * c, r * block);
    for (int t = 0; t < r; ++t) {
      const int off = t * block;
      for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
          for (int k = 0; k < c; ++k) {
            const int row = (i * b + j) * c + k;
            const Cplx u = y[off + i], v = y[off + a + j], w = y[off + a + b + k];
            jac(row, off + i) += v * w;
            jac(row, off + a + j) += u * w;
            jac(row, off + a + b + k) += u * v;
          }
    }
    return jac;
  };
  return g;
}

Parametrization parse_variety_spec(const std::string& spec) {
  if (spec == "twisted-cubic") return twisted_cubic();
  if (spec == "x2-quartic") return x2_quartic();
  if (spec == "circle") return circle();
  if (spec.rfind("sigma:", 0) == 0) {
    int r = 0, a = 0, b = 0, c = 0;
    char c1 = 0, c2 = 0, c3 = 0;
    std::istringstream in(spec.substr(6));
    if ((in >> r >> c1 >> a >> c2 >> b >> c3 >> c) && c1 == ':' && c2 == ',' && c3 == ',' &&
        in.eof())
      return segre_sigma(r, a, b, c);
  }
  throw std::invalid_argument("unknown variety spec: " + spec +
                              " (expected twisted-cubic, x2-quartic, circle, or sigma:r:a,b,c)");
}

Cplx random_complex(Rng& rng) {
  const double re = rng.gauss();
  const double im = rng.gauss();
  return Cplx(re, im) * 0.7071067811865476;
}

Cplx random_unit_complex(Rng& rng) {
  const double theta = 6.283185307179586 * rng.real01();
  return Cplx(std::cos(theta), std::sin(theta));
}

CVec random_source_point(const Parametrization& g, Rng& rng) {
  CVec y(g.source_dim);
  for (int i = 0; i < g.source_dim; ++i) y[i] = random_complex(rng);
  return y;
}

DimensionInfo image_dimension(const Parametrization& g, Rng& rng, double tol) {
  g.check();
  DimensionInfo info;
  int ranks[3];
  for (int trial = 0; trial < 3; ++trial) {
    const CVec y = random_source_point(g, rng);
    ranks[trial] = static_cast<int>(svd_rank(g.jacobian(y), tol));
  }
  info.dim = ranks[0];
  info.degenerate = !(ranks[0] == ranks[1] && ranks[1] == ranks[2]);
  info.fiber_dim = g.source_dim - info.dim;
  return info;
}

} // namespace br
