"""Walk a measure through the boundedness test and its moment sections.

Three measures on the positive half-line tell three different stories:

* a point mass — bounded, with closed-form Widom constants;
* Lebesgue measure on (0, 1) — bounded, sections are Hilbert-matrix-like;
* the density lambda^(-1/2) near 0 — integrable, yet the head grows too
  fast and the associated operator is unbounded.

Run:  python3 demos/widom_and_moments.py
"""

from __future__ import annotations

import numpy as np

import hankelpos as hp


def describe(name: str, mu: hp.Measure) -> None:
    print(f"--- {name}")
    report = hp.widom_check(mu)
    print(f"    verdict: {report.verdict}")
    print(f"    head constant beta  = {report.beta:.6g}")
    print(f"    tail constant gamma = {report.gamma:.6g}")
    print(f"    rho mass            = {report.rho_total:.6g}")
    if report.verdict != "bounded":
        print("    (no bounded symbol exists; stopping here)")
        return

    pushed = mu if mu.domain == "disc" else hp.cayley_pushforward(mu)
    for n in (2, 8, 32):
        section = hp.section_from_measure(pushed, n)
        cert = hp.positivity_certificate(section)
        norm = hp.norm_estimate(section)
        print(
            f"    N={n:>2}: min eig {cert.min_eig:+.3e}  norm {norm:.6f}  "
            f"verdict {cert.verdict}"
        )


def main() -> None:
    print("Widom boundedness and moment sections")
    print("=====================================")
    describe("unit mass at lambda = 1", hp.halfplane_measure(atoms=[(1.0, 1.0)]))
    describe(
        "Lebesgue on (0, 1)",
        hp.halfplane_measure(pieces=[hp.lebesgue_piece(0.0, 1.0)]),
    )
    describe(
        "density lambda^(-1/2) on (0, 1)",
        hp.halfplane_measure(pieces=[hp.power_piece(1.0, -0.5, "lambda", (0.0, 1.0))]),
    )

    print("--- the Hilbert matrix, for scale")
    print("    sections [1/(j+k+1)] approach the classical bound pi slowly:")
    for n in (2, 8, 64, 512):
        print(f"    N={n:>3}: norm {hp.norm_estimate(hp.hilbert_section(n)):.6f}")
    print(f"    (pi = {np.pi:.6f})")


if __name__ == "__main__":
    main()
