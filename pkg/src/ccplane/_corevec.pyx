# cython: language_level=3, boundscheck=False, cdivision=True
"""Scalar 3-vector kernels, compiled backend.

Mirrors ``ccplane._corevec_py``; keep both in sync.
"""

from libc.math cimport acosh, asinh, atan2, cos, cosh, fabs, sin, sinh, sqrt

COMPILED = True

# 16 * double eps: noise band for the quadratic form of a unit timelike
# vector, scaled by v0^2 at the call sites.
cdef double _FORM_NOISE = 3.552713678800501e-15


cdef inline tuple _renorm_timelike(double v0, double v1, double v2):
    # The form's rounding noise is ~ eps * v0^2.  Within that band of 1
    # the vector is already unit to working precision and sqrt(q) is
    # indistinguishable from 1, so dividing would only inject the noise
    # into the components; return them untouched.  Genuinely
    # non-timelike input still lands in sqrt(<0) and comes out NaN for
    # the typed wrappers to reject.
    cdef double q = v0 * v0 - v1 * v1 - v2 * v2
    if fabs(q - 1.0) <= _FORM_NOISE * (1.0 + v0 * v0):
        if v0 < 0.0:
            return (-v0, -v1, -v2)
        return (v0, v1, v2)
    cdef double s = sqrt(q)
    if v0 < 0.0:
        s = -s
    return (v0 / s, v1 / s, v2 / s)


def minner(x, y):
    """Minkowski bilinear form, signature (-, +, +)."""
    cdef double x0 = x[0], x1 = x[1], x2 = x[2]
    cdef double y0 = y[0], y1 = y[1], y2 = y[2]
    return -x0 * y0 + x1 * y1 + x2 * y2


def mcross(x, y):
    """Minkowski cross product: <mcross(x, y), z> = det(x, y, z)."""
    cdef double x0 = x[0], x1 = x[1], x2 = x[2]
    cdef double y0 = y[0], y1 = y[1], y2 = y[2]
    return (-(x1 * y2 - x2 * y1), x2 * y0 - x0 * y2, x0 * y1 - x1 * y0)


def mnormalize_point(v):
    """Scale a timelike vector onto the upper hyperboloid sheet."""
    return _renorm_timelike(v[0], v[1], v[2])


def mnormalize_space(v):
    """Scale a spacelike vector to unit Minkowski norm."""
    cdef double v0 = v[0], v1 = v[1], v2 = v[2]
    cdef double s = sqrt(-v0 * v0 + v1 * v1 + v2 * v2)
    return (v0 / s, v1 / s, v2 / s)


def mdist(p, q):
    """Distance between hyperboloid points (chord form near 0)."""
    cdef double p0 = p[0], p1 = p[1], p2 = p[2]
    cdef double q0 = q[0], q1 = q[1], q2 = q[2]
    cdef double m = p0 * q0 - p1 * q1 - p2 * q2
    cdef double d0, d1, d2, c
    if m < 1.5:
        d0 = p0 - q0
        d1 = p1 - q1
        d2 = p2 - q2
        c = -d0 * d0 + d1 * d1 + d2 * d2
        if c <= 0.0:
            return 0.0
        return 2.0 * asinh(0.5 * sqrt(c))
    return acosh(m)


def mtangent(p, q):
    """Unit tangent vector at p pointing toward q."""
    cdef double p0 = p[0], p1 = p[1], p2 = p[2]
    cdef double q0 = q[0], q1 = q[1], q2 = q[2]
    cdef double m = -p0 * q0 + p1 * q1 + p2 * q2
    cdef double w0 = q0 + m * p0, w1 = q1 + m * p1, w2 = q2 + m * p2
    cdef double s
    if m > -2.0:
        s = sqrt(-w0 * w0 + w1 * w1 + w2 * w2)
    else:
        # Far apart, the squared components of w cancel catastrophically;
        # the norm is sqrt(m^2 - 1) identically, so use that instead.
        s = sqrt(m * m - 1.0)
    return (w0 / s, w1 / s, w2 / s)


def mgeo_point(p, n, t):
    """cosh(t) p + sinh(t) n, renormalized onto the hyperboloid."""
    cdef double p0 = p[0], p1 = p[1], p2 = p[2]
    cdef double n0 = n[0], n1 = n[1], n2 = n[2]
    cdef double tt = t
    cdef double ch = cosh(tt), sh = sinh(tt)
    cdef double v0 = ch * p0 + sh * n0
    cdef double v1 = ch * p1 + sh * n1
    cdef double v2 = ch * p2 + sh * n2
    return _renorm_timelike(v0, v1, v2)


def mreflect(p, n):
    """Reflect p across the geodesic with unit spacelike normal n."""
    cdef double p0 = p[0], p1 = p[1], p2 = p[2]
    cdef double n0 = n[0], n1 = n[1], n2 = n[2]
    cdef double s = 2.0 * (-p0 * n0 + p1 * n1 + p2 * n2)
    cdef double v0 = p0 - s * n0, v1 = p1 - s * n1, v2 = p2 - s * n2
    return _renorm_timelike(v0, v1, v2)


def mfoot(p, n):
    """Orthogonal projection of p onto the geodesic with normal n."""
    cdef double p0 = p[0], p1 = p[1], p2 = p[2]
    cdef double n0 = n[0], n1 = n[1], n2 = n[2]
    cdef double s = -p0 * n0 + p1 * n1 + p2 * n2
    cdef double v0 = p0 - s * n0, v1 = p1 - s * n1, v2 = p2 - s * n2
    return _renorm_timelike(v0, v1, v2)


def mmid(p, q):
    """Hyperbolic midpoint of p and q."""
    return _renorm_timelike(p[0] + q[0], p[1] + q[1], p[2] + q[2])


def sdot(x, y):
    cdef double x0 = x[0], x1 = x[1], x2 = x[2]
    cdef double y0 = y[0], y1 = y[1], y2 = y[2]
    return x0 * y0 + x1 * y1 + x2 * y2


def scross(x, y):
    cdef double x0 = x[0], x1 = x[1], x2 = x[2]
    cdef double y0 = y[0], y1 = y[1], y2 = y[2]
    return (x1 * y2 - x2 * y1, x2 * y0 - x0 * y2, x0 * y1 - x1 * y0)


def snormalize(v):
    cdef double v0 = v[0], v1 = v[1], v2 = v[2]
    cdef double s = sqrt(v0 * v0 + v1 * v1 + v2 * v2)
    return (v0 / s, v1 / s, v2 / s)


def sdist(p, q):
    """Great-circle distance, stable at both ends of [0, pi]."""
    cdef double p0 = p[0], p1 = p[1], p2 = p[2]
    cdef double q0 = q[0], q1 = q[1], q2 = q[2]
    cdef double c0 = p1 * q2 - p2 * q1
    cdef double c1 = p2 * q0 - p0 * q2
    cdef double c2 = p0 * q1 - p1 * q0
    return atan2(sqrt(c0 * c0 + c1 * c1 + c2 * c2), p0 * q0 + p1 * q1 + p2 * q2)


def stangent(p, q):
    """Unit tangent vector at p pointing toward q on the sphere."""
    cdef double p0 = p[0], p1 = p[1], p2 = p[2]
    cdef double q0 = q[0], q1 = q[1], q2 = q[2]
    cdef double m = p0 * q0 + p1 * q1 + p2 * q2
    cdef double w0 = q0 - m * p0, w1 = q1 - m * p1, w2 = q2 - m * p2
    cdef double s = sqrt(w0 * w0 + w1 * w1 + w2 * w2)
    return (w0 / s, w1 / s, w2 / s)


def sgeo_point(p, n, t):
    """cos(t) p + sin(t) n, renormalized onto the sphere."""
    cdef double p0 = p[0], p1 = p[1], p2 = p[2]
    cdef double n0 = n[0], n1 = n[1], n2 = n[2]
    cdef double tt = t
    cdef double ct = cos(tt), st = sin(tt)
    cdef double v0 = ct * p0 + st * n0
    cdef double v1 = ct * p1 + st * n1
    cdef double v2 = ct * p2 + st * n2
    cdef double s = sqrt(v0 * v0 + v1 * v1 + v2 * v2)
    return (v0 / s, v1 / s, v2 / s)


def sfoot(p, n):
    """Projection of p onto the great circle with unit normal n."""
    cdef double p0 = p[0], p1 = p[1], p2 = p[2]
    cdef double n0 = n[0], n1 = n[1], n2 = n[2]
    cdef double s = p0 * n0 + p1 * n1 + p2 * n2
    cdef double v0 = p0 - s * n0, v1 = p1 - s * n1, v2 = p2 - s * n2
    cdef double r = sqrt(v0 * v0 + v1 * v1 + v2 * v2)
    return (v0 / r, v1 / r, v2 / r)


def smid(p, q):
    """Spherical midpoint of p and q (undefined for antipodes)."""
    cdef double v0 = p[0] + q[0], v1 = p[1] + q[1], v2 = p[2] + q[2]
    cdef double r = sqrt(v0 * v0 + v1 * v1 + v2 * v2)
    return (v0 / r, v1 / r, v2 / r)
