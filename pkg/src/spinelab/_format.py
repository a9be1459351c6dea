"""Deterministic number formatting shared by the CLI and chart writers."""


def fmt_float(x: float) -> str:
    """At most 15 significant digits; byte-stable across runs."""
    return f"{float(x):.15g}"


def round15(x: float) -> float:
    """Float rounded to 15 significant digits, for JSON payloads."""
    return float(f"{float(x):.15g}")


def fmt_complex(z: complex) -> str:
    """Render a + bi with the real part omitted when zero."""
    re = round15(z.real)
    im = round15(z.imag)
    if re == 0.0:
        return f"{fmt_float(im)}i"
    sign = "+" if im >= 0.0 else "-"
    return f"{fmt_float(re)}{sign}{fmt_float(abs(im))}i"


def round_floats(obj):
    """Recursively round every float in a JSON-ready structure."""
    if isinstance(obj, bool):
        return obj
    if isinstance(obj, float):
        return round15(obj)
    if isinstance(obj, dict):
        return {k: round_floats(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [round_floats(v) for v in obj]
    return obj
