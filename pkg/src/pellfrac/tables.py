"""Curated reference tables and their byte-stable text rendering.

The row data is fixed reference material (tests cross-check it against
the closed-form constructors); the renderings are what `pellfrac table`
prints and what the golden files under tests/golden pin byte-for-byte.
"""

from __future__ import annotations

from .errors import DomainError
from .kfib import f_poly_coeffs, f_seq

# columns: e, k, d, x, y
INTRO_J2 = (
    (1, 1, 3, 2, 1),
    (2, 1, 8, 3, 1),
    (2, 2, 6, 5, 2),
    (3, 1, 15, 4, 1),
    (3, 2, 12, 7, 2),
    (3, 3, 11, 10, 3),
    (4, 1, 24, 5, 1),
    (4, 2, 20, 9, 2),
    (4, 4, 18, 17, 4),
)

# columns: e, k, d, x, y
INTRO_J3 = (
    (6, 2, 41, 32, 5),
    (11, 2, 130, 57, 5),
    (16, 2, 269, 82, 5),
    (19, 4, 370, 327, 17),
    (36, 4, 1313, 616, 17),
    (40, 6, 1613, 1486, 37),
    (69, 8, 4778, 4493, 65),
)

# columns: m, k, f_{m-1}, f_m, ell, e, d, x
MAIN = (
    (3, 1, 2, 3, 0, 2, 7, 8),
    (3, 1, 2, 3, 1, 5, 32, 17),
    (3, 1, 2, 3, 2, 8, 75, 26),
    (3, 1, 2, 3, 3, 11, 136, 35),
    (3, 2, 5, 12, 4, 25, 646, 305),
    (3, 3, 10, 33, 0, 18, 335, 604),
    (3, 4, 17, 72, 1, 38, 1462, 2753),
    (3, 5, 26, 135, 0, 70, 4927, 9476),
    (4, 1, 3, 5, 0, 3, 13, 18),
    (4, 1, 3, 5, 1, 8, 74, 43),
    (4, 2, 12, 29, 1, 30, 925, 882),
    (4, 3, 33, 109, 0, 56, 3170, 6137),
    (5, 2, 29, 70, 2, 71, 5100, 4999),
    (5, 2, 29, 70, 4, 141, 19998, 9899),
    (5, 2, 29, 70, 6, 211, 44696, 14799),
    (5, 4, 305, 1292, 2, 1294, 1675047, 1672153),
    (6, 1, 8, 13, 0, 7, 58, 99),
    (6, 1, 8, 13, 1, 20, 425, 268),
    (6, 2, 70, 169, 1, 170, 29041, 28800),
    (7, 1, 13, 21, 0, 11, 135, 244),
    (7, 2, 169, 408, 2, 409, 167620, 167041),
    (9, 1, 34, 55, 0, 28, 819, 1574),
    (10, 1, 55, 89, 0, 45, 2081, 4060),
    (12, 1, 144, 233, 0, 117, 13834, 27405),
    (13, 1, 233, 377, 0, 189, 35955, 71486),
)

FN_RANGE = range(-2, 12)

TABLE_NAMES = ("intro-j2", "intro-j3", "fn", "main")


def render_table(name: str, k: int | None = None) -> str:
    """Text rendering of one named table; k only applies to 'fn'."""
    if name == "intro-j2":
        return _render(
            ["# j=2 family: sqrt(d) = [e; (k, 2e)], d = e^2 + 2e/k, x = k*e + 1, y = k"],
            ("e", "k", "d", "x", "y"),
            INTRO_J2,
        )
    if name == "intro-j3":
        return _render(
            ["# j=3 family: sqrt(d) = [e; (k, k, 2e)], y = k^2 + 1, x = (k^2+1)*e + k"],
            ("e", "k", "d", "x", "y"),
            INTRO_J3,
        )
    if name == "main":
        return _render(
            [
                "# uniform-quotient families, period j = m + 1",
                "# x = f_m*e + f_{m-1}, y = f_m",
            ],
            ("m", "k", "f_{m-1}", "f_m", "ell", "e", "d", "x"),
            MAIN,
        )
    if name == "fn":
        return _render_fn(k)
    raise DomainError(f"unknown table {name!r}; choose from {', '.join(TABLE_NAMES)}")


def polynomial_str(n: int) -> str:
    """f_n written as a polynomial in k, e.g. 'k^4+3k^2+1'."""
    if n == -2:
        return "1"
    if n == -1:
        return "0"
    terms = []
    for i, a in enumerate(f_poly_coeffs(n).coeffs):
        power = n - 2 * i
        if power == 0:
            terms.append(str(a))
        else:
            kpart = "k" if power == 1 else f"k^{power}"
            terms.append(kpart if a == 1 else f"{a}{kpart}")
    return "+".join(terms)


def _render_fn(k: int | None) -> str:
    header = "# f_{-2} = 1, f_{-1} = 0, f_n = k*f_{n-1} + f_{n-2}"
    if k is None:
        rows = [(str(n), polynomial_str(n)) for n in FN_RANGE]
        comments = [header]
    else:
        seq = f_seq(k, FN_RANGE.stop - 1)
        rows = [(str(n), str(seq.f(n))) for n in FN_RANGE]
        comments = [f"{header}, at k = {k}"]
    width = max(len(r[0]) for r in rows + [("n",)])
    lines = comments + [f"{'n'.rjust(width)} f_n"]
    lines += [f"{n.rjust(width)} {value}" for n, value in rows]
    return "\n".join(lines) + "\n"


def _render(comments: list[str], headers: tuple[str, ...], rows) -> str:
    cells = [[str(v) for v in row] for row in rows]
    widths = [
        max(len(headers[c]), max(len(row[c]) for row in cells))
        for c in range(len(headers))
    ]
    lines = list(comments)
    lines.append(" ".join(h.rjust(w) for h, w in zip(headers, widths)))
    for row in cells:
        lines.append(" ".join(v.rjust(w) for v, w in zip(row, widths)))
    return "\n".join(lines) + "\n"
