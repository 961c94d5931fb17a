"""The symmetric-function machinery underneath H(q).

Transformed Hall-Littlewood functions, the Cauchy series Omega and its
plethystic logarithm.  The T^n coefficient of Log Omega, paired against a
product of Schur functions, is (up to sign and a factor q - 1) the
multiplicity polynomial.
"""

from tensormult import pleth_exp, pleth_log
from tensormult.plethys import cauchy_omega
from tensormult.coeffring import format_poly
from tensormult.symfunc import hall_littlewood_transformed, kostka_foulkes
from tensormult.partitions import partitions

print("Kostka-Foulkes polynomials K_{nu,la}(t), n = 4")
ps = partitions(4)
print(" " * 14 + "".join(f"{str(la):>16}" for la in ps))
for nu in ps:
    print(f"{str(nu):<14}" + "".join(f"{format_poly(kostka_foulkes(nu, la).coeffs, 't'):>16}" for la in ps))

print("\nH~_(2,1)(x;q) in the Schur basis:")
for mu, c in sorted(hall_littlewood_transformed((2, 1)).convert("schur").terms.items(), reverse=True):
    print(f"  s_{mu}: {c}")

# With one alphabet and g = 0 every level above T^1 of Log Omega vanishes:
# a single generic character never contains the trivial one.
print("\nLog Omega, one alphabet, g = 0, levels:", [len(pleth_log(cauchy_omega(0, 1, 3)).coefficient(m)) for m in range(4)])

omega = cauchy_omega(0, 3, 2)
log = pleth_log(omega)
print("Log Omega for three alphabets, g = 0, power-sum coefficients at T^2:")
for key, c in sorted(log.coefficient(2).items()):
    print(f"  p_{key[0]} p_{key[1]} p_{key[2]}: {c}")
print("Exp(Log Omega) == Omega:", pleth_exp(log) == omega)
