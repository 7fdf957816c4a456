"""Independent high-precision reference values (mpmath) for the acceptance suite."""
from mpmath import mp, mpf, quad, log, exp, expm1, sqrt, pi, erfc, inf, gammainc, re

mp.dps = 40

def normal():
    f = lambda x: exp(-x * x / 2) / sqrt(2 * pi)
    F = lambda x: erfc(-x / sqrt(2)) / 2
    return f, F, [-inf, -2, 0, 2, inf]

def expo():
    return (lambda x: exp(-x)), (lambda x: -expm1(-x)), [0, 1, 5, inf]

def logistic():
    return (lambda x: exp(-x) / (1 + exp(-x)) ** 2), (lambda x: 1 / (1 + exp(-x))), [-inf, -5, 0, 5, inf]

def rayleigh():
    return (lambda x: x * exp(-x * x / 2)), (lambda x: -expm1(-x * x / 2)), [0, 1, 3, inf]

def pareto():
    return (lambda x: 2 / x ** 3), (lambda x: 1 - x ** -2), [1, 2, 10, inf]

def weibull():
    return (lambda x: 2 * x * exp(-x * x)), (lambda x: -expm1(-x * x)), [0, 1, 3, inf]

def maxwell():
    f = lambda x: sqrt(2 / pi) * x * x * exp(-x * x / 2)
    F = lambda x: gammainc(mpf(3) / 2, 0, x * x / 2, regularized=True)
    return f, F, [0, 1, 2, 4, inf]

def kum():
    return (lambda x: 6 * x * (1 - x * x) ** 2), (lambda x: x * x * (3 - 3 * x * x + x ** 4)), [0, mpf("0.5"), 1]

def unif():
    return (lambda x: mpf(1)), (lambda x: x), [0, mpf("0.5"), 1]

def safe(h):
    def g(x):
        try:
            v = h(x)
        except (ValueError, ZeroDivisionError):
            return mpf(0)
        return mpf(0) if v != v or abs(v) == inf else re(v)
    return g

def left(b):
    f, F, pts = b
    return safe(lambda x: -f(x) * log(F(x))), pts

def two(b):
    f, F, pts = b
    return safe(lambda x: -f(x) * log(F(x) * (1 - F(x))) / 2), pts

def moments(g, pts):
    m = quad(lambda x: x * g(x), pts)
    v = quad(lambda x: (x - m) ** 2 * g(x), pts)
    return m, v

out = {}
for name, b in [("IU", unif()), ("IN", normal()), ("IE", expo()), ("Ilogis", logistic()),
                ("IRay", rayleigh()), ("IPar", pareto()), ("IWei", weibull()),
                ("IMaxw", maxwell()), ("IKum", kum())]:
    g, pts = left(b)
    m, v = moments(g, pts)
    out[name + "_mean"], out[name + "_var"] = m, v

f, F, _ = kum()
m = quad(lambda x: x * f(x), [0, 1])
out["Kum_var"] = quad(lambda x: (x - m) ** 2 * f(x), [0, 1])

def bisect(g, a, b):
    a, b = mpf(a), mpf(b)
    ga = g(a)
    for _ in range(200):
        m = (a + b) / 2
        gm = g(m)
        if (gm > 0) == (ga > 0):
            a, ga = m, gm
        else:
            b = m
    return (a + b) / 2

def inv(G, p, x0=None):
    return bisect(lambda x: G(x) - p, mpf("1e-30"), 1 - mpf("1e-30"))

hl = lambda u: u * (1 - log(u))
htwo = lambda u: u - u * log(u) / 2 + (1 - u) * log(1 - u) / 2
out["median_const"] = inv(hl, mpf("0.5"), mpf("0.2"))
out["u2tail_p90"] = inv(htwo, mpf("0.9"), mpf("0.95"))
Kinv = lambda u: sqrt(1 - (1 - u) ** (mpf(1) / 3))
out["kum_p90"] = Kinv(mpf("0.9"))
out["kum2tail_p90"] = Kinv(out["u2tail_p90"])

c = (1 - sqrt(exp(2) - 4) / exp(1)) / 2
out["cross_lo"], out["cross_hi"] = c, 1 - c
out["psi_max"] = -c * log(c) / 2 + (1 - c) * log(1 - c) / 2
out["expo_cross_lo"], out["expo_cross_hi"] = -log(1 - c), -log(c)

# arc lengths
def arc(g, a, b):
    return quad(lambda x: sqrt(1 + g(x) ** 2), [a, (a + b) / 2, b])

g2u, _ = two(unif())
gk2, _ = two(kum())
out["arc_U"] = arc(lambda x: mpf(1), 0, 1)
out["arc_U2"] = arc(g2u, 0, 1)
out["arc_Kum"] = arc(kum()[0], 0, 1)
out["arc_Kum2"] = arc(gk2, 0, 1)
out["tail_U"] = arc(lambda x: mpf(1), mpf("0.9"), 1)
out["tail_U2"] = arc(g2u, out["u2tail_p90"], 1)
out["tail_Kum"] = arc(kum()[0], out["kum_p90"], 1)
out["tail_Kum2"] = arc(gk2, out["kum2tail_p90"], 1)
# survivals at the upper two-sided crossing
xk = Kinv(1 - c)
out["kum_cross_x"] = xk
out["surv_U"] = c
out["surv_U2"] = 1 - htwo(1 - c)
out["surv_Kum"] = (1 - xk * xk) ** 3
out["surv_Kum2"] = 1 - htwo(1 - (1 - xk * xk) ** 3)

# IN left: quartiles, mode, kappa; N two-sided kappa
fN, FN, _ = normal()
def nq(u):
    return bisect(lambda x: FN(x) - u, -10, 10)
def left_q(p):
    return nq(inv(hl, p, mpf("0.1") if p < 0.3 else mpf("0.5")))
def two_q(p):
    return nq(inv(htwo, p, p))
qs = {p: left_q(mpf(p)) for p in ["0.1", "0.25", "0.5", "0.75", "0.9"]}
out["IN_q1"], out["IN_q2"], out["IN_q3"] = qs["0.25"], qs["0.5"], qs["0.75"]
out["IN_kappa"] = (qs["0.75"] - qs["0.25"]) / (2 * (qs["0.9"] - qs["0.1"]))
out["IN_bowley"] = ((qs["0.75"] - qs["0.5"]) - (qs["0.5"] - qs["0.25"])) / (qs["0.75"] - qs["0.25"])
t = {p: two_q(mpf(p)) for p in ["0.1", "0.25", "0.75", "0.9"]}
out["N2_kappa"] = (t["0.75"] - t["0.25"]) / (2 * (t["0.9"] - t["0.1"]))
out["N2_q1"], out["N2_q3"] = t["0.25"], t["0.75"]
dl = lambda x: x * fN(x) * log(FN(x)) - fN(x) ** 2 / FN(x)
out["IN_mode"] = bisect(dl, -1.5, -0.5)

for k, v in out.items():
    print(f"{k} = {mp.nstr(v, 17)}")
