"""Reduction run reports: size parameters going in, critical structure out."""


class ComplexityReport:
    """Parameters of one reduction in the units of the cubic time bound.

    n, p, d are measured on the input parametrization; m_k and m_tilde on
    the reduced output.  wall_time maps phase names to seconds and is
    excluded from determinism comparisons; the memory figure is the
    worst-case n^2 p d^2 estimate, not a measurement.
    """

    omega = 3

    def __init__(self, n, p, d, m_k, wall_time=None):
        self.n = n
        self.p = p
        self.d = d
        self.m_k = list(m_k)
        self.m_tilde = sum(m * m for m in self.m_k)
        self.wall_time = dict(wall_time or {})
        self.peak_memory_estimate = n * n * p * d * d

    def to_json(self):
        return {
            "n": self.n,
            "p": self.p,
            "d": self.d,
            "m_k": self.m_k,
            "m_tilde": self.m_tilde,
            "omega": self.omega,
            "peak_memory_estimate": self.peak_memory_estimate,
            "wall_time": self.wall_time,
        }

    def table(self):
        """Human-readable lines, timing last so diffs line up."""
        rows = [
            ("cells (n)", self.n),
            ("max up-degree (p)", self.p),
            ("max stalk rank (d)", self.d),
            ("critical by dim (m_k)", " ".join(map(str, self.m_k)) or "-"),
            ("sum of squares (m~)", self.m_tilde),
            ("matmul exponent (w)", self.omega),
            ("memory estimate (n2pd2)", self.peak_memory_estimate),
        ]
        rows += [
            ("time: " + phase, "%.6f s" % seconds)
            for phase, seconds in sorted(self.wall_time.items())
        ]
        width = max(len(label) for label, _ in rows)
        return "\n".join("%-*s  %s" % (width, label, value) for label, value in rows)


def input_parameters(param):
    """(n, p, d) of a parametrization, measured before any reduction."""
    return len(param.poset), param.poset.p(), param.max_stalk_rank()


def build_report(n, p, d, morse_data, wall_time=None):
    return ComplexityReport(n, p, d, morse_data.critical_counts(), wall_time)
