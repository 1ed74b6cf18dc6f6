"""
Verbs on single compositions and pairs: hooks, construct, verify, closure.
"""

from ..combinatorics import (
    KAPPA_PLUS_ONE,
    KappaAffine,
    format_composition,
    hook_factor,
    hook_factors_all,
    parse_pair,
)
from ..critical import check_critical_pair, closure, construct_beta, construct_by_factor, is_critical_pair
from ..misc import render_diagram, render_factor_table
from ._solver import EXIT_DOMAIN, BaseSolver, Command, OutputDocument


def _fmt(alpha) -> str:
    return format_composition(alpha, trim=True)


class PairSolver(BaseSolver):
    def hooks(self, command: Command) -> OutputDocument:
        alpha = self.composition(command, "alpha")
        node = self.node(command)
        t = KAPPA_PLUS_ONE if command.get("t") is None else KappaAffine(*parse_pair(command.get("t"), "t"))

        text = render_diagram(alpha, node) + "\n\n" + render_factor_table(alpha, t)
        if node is not None:
            text += f"\n\nh(α,{t};{node}) = {hook_factor(alpha, node, t)}"
        payload = {
            "alpha": list(alpha),
            "t": [str(t.slope), str(t.intercept)],
            "node": None if node is None else list(node),
            "factors": [
                {
                    "node": list(f.node),
                    "slope": str(f.slope),
                    "intercept": str(f.intercept),
                    "reduced": list(f.reduced()),
                }
                for f in hook_factors_all(alpha, t)
            ],
        }
        return self.emit(command, payload, text)

    def construct(self, command: Command) -> OutputDocument:
        alpha = self.composition(command, "alpha")
        node = self.node(command)
        if node is not None:
            beta, trace = construct_beta(alpha, node)
            runs = [(node, beta, trace)]
        else:
            m, n = self.factor(command)
            runs = [(r.node, r.beta, r.trace) for r in construct_by_factor(alpha, m, n)]
            if not runs:
                raise ValueError(f"no hook factor of {_fmt(alpha)} is proportional to {m}κ+{n}")

        records, blocks = [], []
        for node, beta, trace in runs:
            certificate = is_critical_pair(trace.alpha, beta, trace.m, trace.n)
            records.append(
                {
                    "node": list(node),
                    "beta": list(beta.trimmed()),
                    "trace": trace.to_dict(),
                    "quotients": [str(q) for q in certificate.quotients] if certificate else None,
                }
            )
            blocks.append(
                "\n".join(
                    [
                        f"node {node}: h = {trace.m}κ+{trace.n}, shift l={trace.l}, N={trace.N}",
                        f"T={trace.T} t={trace.t} k={trace.k} T0={trace.T0}",
                        "w = " + ",".join(map(str, trace.w)),
                        "ξ = " + ", ".join(map(str, trace.xi)),
                        f"β = {_fmt(beta)}",
                    ]
                )
            )
        payload = {"alpha": list(alpha), "results": records}
        return self.emit(command, payload, f"α = {_fmt(alpha)}\n" + "\n\n".join(blocks))

    def verify(self, command: Command) -> OutputDocument:
        alpha = self.composition(command, "alpha")
        beta = self.composition(command, "beta")
        m, n = self.factor(command)
        check = check_critical_pair(alpha, beta, m, n, extended=bool(command.get("extended")))

        if check.certificate is None:
            payload = {
                "alpha": list(alpha),
                "beta": list(beta),
                "factor": [m, n],
                "critical": False,
                "violated_index": check.violated_index,
                "reason": check.reason,
            }
            return self.emit(command, payload, f"not a (−{n}/{m})-critical pair: {check.reason}", EXIT_DOMAIN)

        certificate = check.certificate
        payload = dict(certificate.to_dict(), critical=True)
        text = (
            f"({_fmt(alpha)}; {_fmt(beta)}) is a (−{n}/{m})-critical pair\n"
            "q = " + ",".join(str(q) for q in certificate.quotients)
        )
        return self.emit(command, payload, text)

    def closure(self, command: Command) -> OutputDocument:
        alpha = self.composition(command, "alpha")
        m, n = self.factor(command)
        depth = command.get("depth", self.cfg.closure_depth)
        result = closure(alpha, m, n, depth)

        lines = [f"closure of {_fmt(alpha)} under {result.m}κ+{result.n}, depth {depth}: {len(result)} partners"]
        for step in result.steps:
            lines.append(
                f"  [{step.depth}] {_fmt(step.source)} at {step.node} ({step.m}κ+{step.n}) -> {_fmt(step.beta)}"
            )
        lines += [f"  {_fmt(beta)}" for beta in result.partners]
        return self.emit(command, result.to_dict(), "\n".join(lines))
