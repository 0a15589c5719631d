#!/usr/bin/env python3
"""Convergence study for the Hankel-contour quadrature.

Sweeps panel counts and contour radii at a fixed point s and prints the
error against the Euler-Maclaurin route, demonstrating spectral convergence
of the Gauss-Legendre panels and independence of the contour geometry
(the integrand is analytic between any two admissible contours).
"""

import argparse
import math

from zetaroutes.numeric import ContourSpec, default_contour, zeta_em, zeta_hankel


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--re", type=float, default=-0.5)
    parser.add_argument("--im", type=float, default=1.0)
    args = parser.parse_args()
    s = complex(args.re, args.im)

    reference = zeta_em(s)
    print(f"s = {s}, Euler-Maclaurin reference = {reference:.15g}\n")

    print("panel refinement (radius pi, 16 nodes/panel):")
    for panels in (2, 4, 8, 16, 32):
        spec = ContourSpec(
            x_max=default_contour(s).x_max,
            panels_ray=panels,
            panels_arc=max(2, panels // 2),
        )
        value = zeta_hankel(s, spec, tol=1e-15, max_refinements=0)
        print(f"  {panels:>3} ray panels: error {abs(value - reference):.3e}")

    print("\ncontour independence (32 ray panels):")
    for radius in (math.pi / 2, 2.0, math.pi, 4.0, 5.5):
        spec = ContourSpec(radius=radius, x_max=40.0, panels_ray=32, panels_arc=16)
        value = zeta_hankel(s, spec, tol=1e-15, max_refinements=0)
        print(f"  radius {radius:5.3f}: error {abs(value - reference):.3e}")


if __name__ == "__main__":
    main()
