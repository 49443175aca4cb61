"""Smoke test for the python module: one call through every binding group."""
import math

import wseries_py as ws


def close(a, b, tol=1e-12):
    return abs(a - b) <= tol * max(1.0, abs(b))


# Oracle: defining equations, both real and complex.
w10 = ws.lambert_w_real(0, 10.0)
assert close(w10 * math.exp(w10), 10.0)
wc = ws.lambert_w(0, 1 + 1j)
assert abs(wc * complex(math.e) ** wc - (1 + 1j)) <= 1e-13
wm = ws.lambert_w(-1, -0.2 + 0j)
assert abs(wm * complex(math.e) ** wm - (-0.2)) <= 1e-13 and wm.real < -1

om = ws.omega_constant()
assert close(om * math.exp(om), 1.0)
assert close(ws.wright_omega_real(0.0), om)
oc = ws.wright_omega(2 + 3j)
assert abs(oc + complex(math.log(oc.real**2 + oc.imag**2)) / 2
           + 1j * math.atan2(oc.imag, oc.real) - (2 + 3j)) <= 1e-12

# Series evaluators against the oracle.
assert close(ws.phi_alpha(10.0, 1.0, "comtet", 40), w10, 1e-10)
assert close(ws.phi_alpha(1.5, 1.0, "improved", 60), ws.lambert_w_real(0, 1.5), 1e-9)
t5 = ws.transformed_w(5 + 0j, 1 + 0j, "improved", 40)
assert abs(t5 - ws.lambert_w_real(0, 5.0)) <= 1e-11
assert close(ws.wright_series_eval(math.e, 40), 1.0)
assert close(ws.wright_series_a(1), om / (1 + om), 1e-12)

hat = ws.branch_m1_approx(-0.2, "transformed")
assert abs(hat.real - (-2.3810)) <= 1e-3 and hat.imag == 0.0

# Convergence thresholds and predicates.
assert ws.comtet_real_threshold(1.0) == math.e
assert close(ws.transformed_comtet_threshold(-1.0), math.exp(3.0))
assert ws.transformed_improved_threshold(0.0, exact=True) < ws.comtet_real_threshold(1.0)
assert ws.improved_radius(0j) == 1.0
v_in = 1.0 / math.log(10.0)
assert ws.comtet_converges(v_in + 0j, complex(math.log(math.log(10.0)) / math.log(10.0)))

boundary = ws.comtet_complex_boundary(25)
assert len(boundary) == 49
assert all(abs(r[3]) <= 1e-10 for r in boundary)

consts = ws.constants()
assert close(consts["sigma_1"], 224.79095131984286, 1e-10)
assert close(consts["x_1"], 1.0044584872518878, 1e-10)
assert consts["alpha_star"] < 1 < consts["alpha_c"]

# Identity suites and error mapping.
assert ws.check_identities(8) is True
try:
    ws.transformed_w(1 + 0j, 0j, "comtet", 10)  # singular point z = e^{-p}
    raise AssertionError("expected ValueError at the singular point")
except ValueError:
    pass

print("smoke test ok")
