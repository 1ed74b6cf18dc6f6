"""
The `jack` verb: ζ_α and its pole report.
"""

from ..combinatorics import format_composition
from ..jack import split
from ._solver import BaseSolver, Command, OutputDocument


class JackSolver(BaseSolver):
    def jack(self, command: Command) -> OutputDocument:
        alpha = self.composition(command, "alpha")
        N = command.get("nvars", alpha.N)
        report = self.cfg.jack_engine.report(alpha, N)

        lines = [f"ζ_({format_composition(alpha)}) in {N} variables, {len(report.zeta)} terms"]
        for exponent, coeff in report.zeta:
            numer, denom = split(coeff)
            value = str(numer) if denom.degree == 0 else f"({numer})/({denom})"
            lines.append(f"  x^({','.join(map(str, exponent))}): {value}")
        lines.append(f"denominator lcm: {report.denominator_lcm}")
        poles = ", ".join(f"({m}κ+{n})^{k}" for (m, n), k in report.pole_factors.items()) or "none"
        lines.append(f"poles: {poles}")
        lines.append(f"knop-sahi: {'ok' if report.knop_sahi_ok else 'FAILED'}")
        trailing = {True: "ok", False: "FAILED", None: "n/a"}[report.trailing_coeff_ok]
        lines.append(f"trailing coefficient: {trailing}")
        for (m, n), partners in report.pole_partners.items():
            found = "; ".join(format_composition(p) for p in partners) or "none"
            lines.append(f"partners at κ=-{n}/{m}: {found}")
        return self.emit(command, report.to_dict(), "\n".join(lines))
