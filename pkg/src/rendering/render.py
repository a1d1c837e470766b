"""
Rendering of σ-basis polynomials as text, LaTeX and JSON.

Terms always appear in canonical order (ascending weight, then σ_1^2
before σ_2), so identical inputs give byte-identical output.

Text:   1 + 3/2 σ1 + 1/2 σ1^2 + σ2
LaTeX:  1+\\frac{3}{2}\\sigma_1+\\frac{1}{2}\\sigma_1^2+\\sigma_2
JSON:   {"n": 5, "degree": 2, "terms": [{"sigma": {}, "coeff": "1/1"}, ...]}
"""
import json
from fractions import Fraction
from typing import List, Sequence, Tuple

from src.algebra.rational import format_rational, parse_rational
from src.algebra.sigma import SigmaMonomial, SigmaPoly
from src.config.settings import settings
from src.models.output import GammaDocument, OutputFormat, TermRecord


class PolynomialRenderer:
    """
    Renders SigmaPoly values in the supported output formats.

    Text output uses σ, or settings.ascii_symbol when ascii=True.
    """

    @staticmethod
    def _symbol(ascii: bool) -> str:
        return settings.ascii_symbol if ascii else settings.unicode_symbol

    @staticmethod
    def monomial_text(mono: SigmaMonomial, ascii: bool = False) -> str:
        symbol = PolynomialRenderer._symbol(ascii)
        return "*".join(
            f"{symbol}{d}" + (f"^{e}" if e > 1 else "") for d, e in mono.powers
        )

    @staticmethod
    def text(poly: SigmaPoly, ascii: bool = False) -> str:
        """
        Plain-text rendering.

        Args:
            poly: Polynomial to render
            ascii: Use "s1, s2, ..." instead of "σ1, σ2, ..."

        Returns:
            E.g. "1 + 3/2 σ1 + 1/2 σ1^2 + σ2"; "0" for the zero polynomial
        """
        if poly.is_zero():
            return "0"
        parts: List[str] = []
        for index, (mono, coeff) in enumerate(poly.items()):
            magnitude = abs(coeff)
            if mono.is_one():
                body = str(magnitude)
            elif magnitude == 1:
                body = PolynomialRenderer.monomial_text(mono, ascii)
            else:
                body = f"{magnitude} {PolynomialRenderer.monomial_text(mono, ascii)}"
            if index == 0:
                parts.append(f"-{body}" if coeff < 0 else body)
            else:
                parts.append(f" - {body}" if coeff < 0 else f" + {body}")
        return "".join(parts)

    @staticmethod
    def _latex_coefficient(value: Fraction) -> str:
        if value.denominator == 1:
            return str(value.numerator)
        return f"\\frac{{{value.numerator}}}{{{value.denominator}}}"

    @staticmethod
    def _latex_subscript(value: int) -> str:
        """Single digits bare (\\sigma_1, \\gamma_8), longer indices braced (\\gamma_{12})."""
        text = str(value)
        return text if len(text) == 1 else f"{{{text}}}"

    @staticmethod
    def latex(poly: SigmaPoly) -> str:
        """LaTeX rendering in the published style, e.g. 1+\\frac{11}{6}\\sigma_1+\\sigma_1^2."""
        if poly.is_zero():
            return "0"
        parts: List[str] = []
        for index, (mono, coeff) in enumerate(poly.items()):
            magnitude = abs(coeff)
            factors = "".join(
                f"\\sigma_{PolynomialRenderer._latex_subscript(d)}"
                + (f"^{PolynomialRenderer._latex_subscript(e)}" if e > 1 else "")
                for d, e in mono.powers
            )
            if mono.is_one():
                body = PolynomialRenderer._latex_coefficient(magnitude)
            elif magnitude == 1:
                body = factors
            else:
                body = PolynomialRenderer._latex_coefficient(magnitude) + factors
            sign = "-" if coeff < 0 else ("" if index == 0 else "+")
            parts.append(sign + body)
        return "".join(parts)

    @staticmethod
    def document(n: int, poly: SigmaPoly) -> GammaDocument:
        """JSON document model for γ_n."""
        terms = [
            TermRecord(
                sigma={str(d): e for d, e in mono.powers},
                coeff=format_rational(coeff),
            )
            for mono, coeff in poly.items()
        ]
        return GammaDocument(n=n, degree=int(poly.degree()), terms=terms)

    @staticmethod
    def to_json(n: int, poly: SigmaPoly) -> str:
        return json.dumps(PolynomialRenderer.document(n, poly).model_dump())

    @staticmethod
    def to_json_table(rows: Sequence[Tuple[int, SigmaPoly]]) -> str:
        return json.dumps([PolynomialRenderer.document(n, poly).model_dump() for n, poly in rows])

    @staticmethod
    def from_document(document: GammaDocument) -> SigmaPoly:
        """Rebuild the polynomial described by a JSON document."""
        return SigmaPoly({
            SigmaMonomial.from_mapping({int(d): e for d, e in term.sigma.items()}):
                parse_rational(term.coeff)
            for term in document.terms
        })

    @staticmethod
    def from_json(text: str) -> Tuple[int, SigmaPoly]:
        """
        Parse a single-polynomial JSON document.

        Raises:
            pydantic.ValidationError: If the document does not match the schema
        """
        document = GammaDocument.model_validate_json(text)
        return document.n, PolynomialRenderer.from_document(document)

    @staticmethod
    def render(n: int, poly: SigmaPoly, output_format: OutputFormat, ascii: bool = False) -> str:
        """Render γ_n on its own, as printed by `gamma`."""
        if output_format is OutputFormat.LATEX:
            return PolynomialRenderer.latex(poly)
        if output_format is OutputFormat.JSON:
            return PolynomialRenderer.to_json(n, poly)
        return PolynomialRenderer.text(poly, ascii)

    @staticmethod
    def render_table(
        rows: Sequence[Tuple[int, SigmaPoly]],
        output_format: OutputFormat,
        ascii: bool = False,
    ) -> str:
        """Render several γ_n, one block each, as printed by `table`."""
        if output_format is OutputFormat.JSON:
            return PolynomialRenderer.to_json_table(rows)
        if output_format is OutputFormat.LATEX:
            lines = ["\\begin{eqnarray*}"]
            lines += [
                f"\\gamma_{PolynomialRenderer._latex_subscript(n)} &=& {PolynomialRenderer.latex(poly)}\\\\"
                for n, poly in rows
            ]
            lines.append("\\end{eqnarray*}")
            return "\n".join(lines)
        name = "gamma_" if ascii else "γ"
        return "\n".join(f"{name}{n} = {PolynomialRenderer.text(poly, ascii)}" for n, poly in rows)
