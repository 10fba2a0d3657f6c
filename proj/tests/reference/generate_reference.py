"""Independent reference values for the C++ test suite.

Uses a dense Pade matrix exponential (scipy.linalg.expm) on a Hamiltonian
assembled directly from level and photon energies, with no code shared with
the C++ library. Evolution sign: psi(t) = expm(+iHt) psi(0).

    python3 tests/reference/generate_reference.py
"""
import numpy as np
from scipy.linalg import expm

# basis: 1 |2>, 2 a+|+1>, 3 a+|-1>, 4 a-|+1>, 5 a-|-1>,
#        6 a+b+|0>, 7 a+b-|0>, 8 a-b+|0>, 9 a-b-|0>
def lab_hamiltonian(l1, l2, w0, w1p, w1m, w2, W1, W2):
    h = np.zeros((9, 9), complex)
    energies = [w2, W2 + w1p, W2 + w1m, W2 + w1p, W2 + w1m,
                W1 + W2 + w0, W1 + W2 + w0, W1 + W2 + w0, W1 + W2 + w0]
    np.fill_diagonal(h, energies)
    # b- absorbed: |0> -> |+1>; b+ absorbed: |0> -> |-1>
    for i, j in [(7, 2), (9, 4), (6, 3), (8, 5)]:
        h[i - 1, j - 1] = h[j - 1, i - 1] = l1
    # a+ absorbed from |+1>, a- absorbed from |-1>
    for i, j in [(1, 2), (1, 5)]:
        h[i - 1, j - 1] = h[j - 1, i - 1] = l2
    return h - (w0 + W1 + W2) * np.eye(9)

def hamiltonian(l1, l2, d1, d2):
    W1, W2, w0 = 1000.0, 700.0, 0.0
    return lab_hamiltonian(l1, l2, w0, w0 + W1 + d1, w0 + W1,
                           w0 + W1 + W2 + d2, W1, W2)

def U(l1, l2, d1, d2, t=np.pi):
    return expm(1j * hamiltonian(l1, l2, d1, d2) * t)

ORDER = [8, 6, 7, 5]  # a-b-, a+b-, a-b+, a+b+ (0-based)

def gate(*a, **k):
    return U(*a, **k)[np.ix_(ORDER, ORDER)]

def wrap(x):
    return (x + np.pi) % (2 * np.pi) - np.pi

def classical(l1, l2, d1, d2):
    g = gate(l1, l2, d1, d2)
    eta2 = abs(g[2, 2]) ** 2
    dphi = np.degrees(wrap(np.angle(g[3, 3]) - np.angle(g[2, 2])) / 2)
    return eta2, dphi

def analysis(u, ap, am, bp, bm):
    psi = np.zeros(9, complex)
    psi[5], psi[6], psi[7], psi[8] = ap * bp, ap * bm, am * bp, am * bm
    o = u @ psi
    cpp, cpm, cmp_, cmm = o[5], o[6], o[7], o[8]
    a = np.angle
    dp = wrap(a(cpp) - a(cmp_) - a(ap) + a(am)) / 2
    dm = wrap(a(cpm) - a(cmm) - a(ap) + a(am)) / 2
    R = (abs(cpp)**2 + abs(cmp_)**2) / (abs(cpm)**2 + abs(cmm)**2) * abs(bm / bp)**2
    a2 = abs(am) ** 2
    emp2 = (abs(cmp_) / abs(am * bp)) ** 2 if abs(am * bp) > 1e-6 else None
    epm2 = (abs(cpm) / abs(ap * bm)) ** 2 if abs(ap * bm) > 1e-6 else None
    if abs(a2 - 0.5) < 1e-12:
        q = min(emp2, epm2)
    else:
        q = emp2 if a2 > 0.5 else epm2
    return np.degrees(dp), np.degrees(dm), R, q

def p(name, v):
    print(f"{name} = {v!r}")

p("case1_l2_1_d2_5", classical(1, 1, 0, 5))
p("case1_l2_2p5_d2_30", classical(1, 2.5, 0, 30))
p("case2_reference", classical(1, 2.5, 15, 30))

u = U(1, 2.5, 0, 30)
pops = abs(u[:, 7]) ** 2
p("fig3_end_P8_P5_P2_P7_P1", [pops[7], pops[4], pops[1], pops[6], pops[0]])
u2 = U(1, 2.5, 15, 30)
pops2 = abs(u2[:, 7]) ** 2
p("case2_P2_P7", [pops2[1], pops2[6]])

g = gate(2, 6.85, 65, 70)
p("cnot_conditional_phase_deg", np.degrees(wrap(np.angle(g[3, 3]) - np.angle(g[2, 2]))))
t = np.array([[-1, 1], [1, 1]]) / np.sqrt(2)
T = np.kron(np.eye(2), t)
c = T.conj().T @ np.linalg.matrix_power(g, 3) @ T
p("cnot_upper_mags", [abs(c[0, 0]), abs(c[1, 1])])
p("cnot_lower_mags", [abs(c[2, 3]), abs(c[3, 2])])
p("cnot_upper_phase_deg", np.degrees(np.angle(c[0, 0] + c[1, 1])))
p("cnot_lower_phase_deg", np.degrees(np.angle(c[2, 3] + c[3, 2])))
small = [abs(c[i, j]) for i in range(4) for j in range(4)
         if not ((i == j and i < 2) or (i, j) in [(2, 3), (3, 2)])]
p("cnot_max_small", max(small))
p("cnot_m00", c[0, 0])
p("cnot_m23", c[2, 3])

grid = np.linspace(0, 1, 41)
b1 = (np.sqrt(0.5), np.sqrt(0.5)); b2 = (np.sqrt(3) / 2, 0.5)
for case, d1 in ((1, 0), (2, 15)):
    uu = U(1, 2.5, d1, 30)
    rs, qs = [], []
    for b in (b1, b2):
        for a2 in grid:
            if 0.05 - 1e-12 <= a2 <= 0.95 + 1e-12:
                _, _, R, q = analysis(uu, np.sqrt(1 - a2), np.sqrt(a2), *b)
                rs.append(R); qs.append(q)
    p(f"fig4_case{case}_minR_minQ", (min(rs), min(qs)))

gap = 0.0; lo, hi, mabs = 1e9, -1e9, 0.0
for a2 in grid:
    if 0.1 < a2 < 0.9:
        for b in (b1, b2):
            dp, dm, _, _ = analysis(u2, np.sqrt(1 - a2), np.sqrt(a2), *b)
            lo, hi, mabs = min(lo, dp), max(hi, dp), max(mabs, abs(dm))
        dp_real = analysis(u2, np.sqrt(1 - a2), np.sqrt(a2), *b1)[0]
        dp_var = analysis(u2, np.sqrt(1 - a2) * np.exp(1j * np.pi / 4), np.sqrt(a2), *b1)[0]
        gap = max(gap, abs(dp_var - dp_real))
p("fig5_dphi_plus_range", (lo, hi))
p("fig5_max_abs_dphi_minus", mabs)
p("fig5_variant_gap", gap)
p("fig5_variant_at_0p5", analysis(u2, np.sqrt(0.5) * np.exp(1j * np.pi / 4), np.sqrt(0.5), *b1))

best = -1
for l2 in np.linspace(0.01, 10.0, 1000):
    e, d = classical(1, l2, 15, 30)
    if e >= 0.9:
        best = max(best, d)
p("fig2_case2_best_dphi_eta2_ge_0p9", best)
for l2 in (1.0, 1.2, 1.3, 1.4, 1.5):
    p(f"fig2_case1_d2_5_l2_{l2}", classical(1, l2, 0, 5))
u5 = U(1, 2.5, 0, 5)
p("p0_case1_l2_2p5_d2_5", float(np.sum(abs(u5[5:, 7]) ** 2)))
