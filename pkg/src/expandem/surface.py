"""Deterministic parsing and generation of answer surface-form variants.

Numeric answers (dates, counts, amounts, durations, percentages, measured
quantities) are parsed into exact values and re-rendered in the alternate
formats those values commonly take: reordered and abbreviated dates,
digit/word swaps, unit conversions, and rounded approximations. Doubles as
the offline "rules" expansion method and as the oracle for the LLM route.
"""

from __future__ import annotations

import calendar
import re
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Optional, Union

from . import patterns
from .entity_types import NUMERIC_TYPES, EntityType
from .numwords import (
    MAX_WORDABLE,
    number_to_words,
    ordinal_digits,
    ordinal_words,
    words_to_number,
)
from .scoring import LIGHT, normalize

DEFAULT_VARIANT_CAP = 16

MONTH_NAMES = [m.capitalize() for m in patterns.MONTHS]
MONTH_ABBREVS = [m.capitalize() for m in patterns.MONTH_ABBREVS]

_DURATION_ABBREV = {"second": "sec", "minute": "min", "hour": "hr"}


@dataclass(frozen=True)
class ParsedDate:
    year: Optional[int] = None
    month: Optional[int] = None
    day: Optional[int] = None

    def __post_init__(self):
        if self.year is None and self.month is None and self.day is None:
            raise ValueError("empty date")
        if self.day is not None and self.month is None:
            raise ValueError("day without month")
        if self.month is not None and not 1 <= self.month <= 12:
            raise ValueError(f"month out of range: {self.month}")
        if self.day is not None and not 1 <= self.day <= _days_in(self.month, self.year):
            raise ValueError(f"day out of range: {self.day}")

    def agrees_with(self, other: "ParsedDate") -> bool:
        """Fields present on both sides are equal."""
        for name in ("year", "month", "day"):
            mine, theirs = getattr(self, name), getattr(other, name)
            if mine is not None and theirs is not None and mine != theirs:
                return False
        return True


@dataclass(frozen=True)
class ParsedNumber:
    value: Fraction
    kind: str  # cardinal | ordinal | percent | money | duration | measured
    unit: Optional[str] = None
    currency: Optional[str] = None

    def __post_init__(self):
        if self.kind == "percent" and self.unit is not None:
            raise ValueError("percent takes no unit")
        if self.kind == "money" and self.currency is None:
            raise ValueError("money needs a currency")
        if self.kind == "duration" and self.unit not in patterns.SECONDS_PER:
            raise ValueError(f"not a time unit: {self.unit}")


@dataclass
class VariantSet:
    """Ordered surface variants, deduplicated under light normalization."""

    entries: list[str] = field(default_factory=list)
    provenance: list[str] = field(default_factory=list)
    _seen: set[str] = field(default_factory=set, repr=False)

    @classmethod
    def seeded(cls, source: str) -> "VariantSet":
        vs = cls()
        vs.add(source, "original")
        return vs

    def add(self, text: str, generator: str) -> bool:
        key = normalize(text, LIGHT)
        if not key or key in self._seen:
            return False
        self._seen.add(key)
        self.entries.append(text)
        self.provenance.append(generator)
        return True

    def extend(self, other: "VariantSet"):
        for text, gen in zip(other.entries, other.provenance):
            self.add(text, gen)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self) -> Iterator[str]:
        return iter(self.entries)

    def __contains__(self, text: str) -> bool:
        return normalize(text, LIGHT) in self._seen


def _days_in(month: Optional[int], year: Optional[int]) -> int:
    if month is None:
        return 31
    if year is not None:
        return calendar.monthrange(year, month)[1]
    return [31, 29, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31][month - 1]


_MONTH_GROUP = "|".join(
    sorted(map(re.escape, patterns.MONTH_NUMBER), key=len, reverse=True)
)
_ORD_SUFFIX = r"(?:st|nd|rd|th)?"

_DATE_RES = [
    ("mdy", re.compile(rf"^({_MONTH_GROUP})\.?\s+(\d{{1,2}}){_ORD_SUFFIX},?\s+(\d{{3,4}})$", re.I)),
    ("dmy", re.compile(rf"^(\d{{1,2}}){_ORD_SUFFIX}\s+({_MONTH_GROUP})\.?,?\s+(\d{{3,4}})$", re.I)),
    ("my", re.compile(rf"^({_MONTH_GROUP})\.?(?:,|\s+of)?\s+(\d{{3,4}})$", re.I)),
    ("md", re.compile(rf"^({_MONTH_GROUP})\.?\s+(\d{{1,2}}){_ORD_SUFFIX}$", re.I)),
    ("dm", re.compile(rf"^(\d{{1,2}}){_ORD_SUFFIX}\s+({_MONTH_GROUP})\.?$", re.I)),
    ("m", re.compile(rf"^({_MONTH_GROUP})\.?$", re.I)),
    ("y", re.compile(r"^([12]\d{3})$")),
]


def _parse_date(text: str) -> Optional[ParsedDate]:
    for shape, rx in _DATE_RES:
        m = rx.match(text)
        if not m:
            continue
        try:
            if shape == "mdy":
                return ParsedDate(int(m.group(3)), patterns.MONTH_NUMBER[m.group(1).lower()], int(m.group(2)))
            if shape == "dmy":
                return ParsedDate(int(m.group(3)), patterns.MONTH_NUMBER[m.group(2).lower()], int(m.group(1)))
            if shape == "my":
                return ParsedDate(int(m.group(2)), patterns.MONTH_NUMBER[m.group(1).lower()])
            if shape == "md":
                return ParsedDate(None, patterns.MONTH_NUMBER[m.group(1).lower()], int(m.group(2)))
            if shape == "dm":
                return ParsedDate(None, patterns.MONTH_NUMBER[m.group(2).lower()], int(m.group(1)))
            if shape == "m":
                return ParsedDate(None, patterns.MONTH_NUMBER[m.group(1).lower()])
            return ParsedDate(int(m.group(1)))
        except ValueError:
            return None
    return None


def _parse_value(token: str) -> Optional[Fraction]:
    token = token.strip()
    if re.fullmatch(patterns.NUM, token):
        return Fraction(token.replace(",", ""))
    try:
        return Fraction(words_to_number(token))
    except Exception:
        return None


_PERCENT_PARSE = re.compile(rf"^({patterns.NUM}|{patterns.WORDNUM})\s*(?:%|percents?)$", re.I)
_MONEY_SYM = re.compile(
    rf"^([$£€¥])\s?({patterns.NUM})\s*(thousand|million|billion|trillion)?$", re.I
)
_MONEY_WORD = re.compile(
    rf"^({patterns.NUM}|{patterns.WORDNUM})\s*(thousand|million|billion|trillion)?\s+"
    rf"(dollars?|pounds?|euros?|bucks?|yen)$",
    re.I,
)
_DURATION_COMPOUND = re.compile(
    rf"^(\d+|{patterns.WORDNUM})\s*(hours?|hrs?)\s+(?:and\s+)?(\d+|{patterns.WORDNUM})\s*(minutes?|mins?)$"
    rf"|^(\d+|{patterns.WORDNUM})\s*(minutes?|mins?)\s+(?:and\s+)?(\d+|{patterns.WORDNUM})\s*(seconds?|secs?)$",
    re.I,
)
_DURATION_SINGLE = re.compile(
    rf"^({patterns.NUM}|{patterns.WORDNUM})\s*({'|'.join(patterns.TIME_UNITS)})$", re.I
)
_ORDINAL_DIGITS = re.compile(r"^(\d{1,4})(st|nd|rd|th)$", re.I)
_ORDINAL_WORDS = re.compile(rf"^({patterns.WORD_ORDINAL})$", re.I)
_MEASURED = re.compile(
    rf"^({patterns.NUM}|{patterns.WORDNUM})[\s-]?({'|'.join(sorted(map(re.escape, patterns.MEASURE_UNITS), key=len, reverse=True))})$",
    re.I,
)
_CARDINAL = re.compile(rf"^({patterns.NUM}|{patterns.WORDNUM})$", re.I)

_ORDINAL_WORD_VALUES: dict[str, int] = {}
for _n in range(0, 100):
    try:
        _ORDINAL_WORD_VALUES[ordinal_words(_n)] = _n
    except Exception:  # pragma: no cover
        pass


def parse_numeric(text: str) -> Union[ParsedDate, ParsedNumber, None]:
    """Parse an answer into an exact date or number; None when non-numeric."""
    text = " ".join(text.split())
    if not text:
        return None

    m = _PERCENT_PARSE.match(text)
    if m:
        value = _parse_value(m.group(1))
        if value is not None:
            return ParsedNumber(value, "percent")

    m = _MONEY_SYM.match(text)
    if m:
        value = _parse_value(m.group(2))
        if value is not None:
            if m.group(3):
                value *= patterns.MAGNITUDES[m.group(3).lower()]
            return ParsedNumber(value, "money", currency=m.group(1))
    m = _MONEY_WORD.match(text)
    if m:
        value = _parse_value(m.group(1))
        if value is not None:
            if m.group(2):
                value *= patterns.MAGNITUDES[m.group(2).lower()]
            symbol = patterns.CURRENCY_WORD_TOKENS[m.group(3).lower()]
            return ParsedNumber(value, "money", currency=symbol)

    m = _DURATION_COMPOUND.match(text)
    if m:
        if m.group(1) is not None:
            big, small = _parse_value(m.group(1)), _parse_value(m.group(3))
            if big is not None and small is not None:
                return ParsedNumber(big * 60 + small, "duration", unit="minute")
        else:
            big, small = _parse_value(m.group(5)), _parse_value(m.group(7))
            if big is not None and small is not None:
                return ParsedNumber(big * 60 + small, "duration", unit="second")
    m = _DURATION_SINGLE.match(text)
    if m:
        value = _parse_value(m.group(1))
        if value is not None:
            return ParsedNumber(value, "duration", unit=patterns.TIME_UNITS[m.group(2).lower()])

    date = _parse_date(text)
    if date is not None:
        return date

    m = _ORDINAL_DIGITS.match(text)
    if m:
        return ParsedNumber(Fraction(int(m.group(1))), "ordinal")
    m = _ORDINAL_WORDS.match(text)
    if m:
        value = _ORDINAL_WORD_VALUES.get(m.group(1).lower())
        if value is not None:
            return ParsedNumber(Fraction(value), "ordinal")

    m = _MEASURED.match(text)
    if m:
        value = _parse_value(m.group(1))
        if value is not None:
            long_unit, _ = patterns.MEASURE_UNITS[m.group(2).lower()]
            return ParsedNumber(value, "measured", unit=long_unit)

    m = _CARDINAL.match(text)
    if m:
        value = _parse_value(m.group(1))
        if value is not None:
            return ParsedNumber(value, "cardinal")
    return None


def decimal_str(value: Fraction, grouped: bool = False) -> str:
    """Exact decimal rendering; only terminating fractions are supported."""
    if value < 0:
        return "-" + decimal_str(-value, grouped)
    whole, rem = divmod(value.numerator, value.denominator)
    whole_s = f"{whole:,}" if grouped else str(whole)
    if rem == 0:
        return whole_s
    den = value.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        raise ValueError(f"non-terminating decimal: {value}")
    places = max(twos, fives)
    digits = rem * 10**places // value.denominator
    return f"{whole_s}.{digits:0{places}d}".rstrip("0").rstrip(".")


def round_sig(value: Fraction, sig: int) -> Fraction:
    """Round half-up to `sig` leading significant digits."""
    if value == 0:
        return Fraction(0)
    magnitude = 0
    probe = value
    while probe >= 10:
        probe /= 10
        magnitude += 1
    while probe < 1:
        probe *= 10
        magnitude -= 1
    scale = Fraction(10) ** (magnitude - sig + 1)
    scaled = value / scale
    rounded = (scaled.numerator * 2 + scaled.denominator) // (scaled.denominator * 2)
    return rounded * scale


def approximate_forms(value: Fraction) -> VariantSet:
    """Rounded "about/approximately/almost" renderings at 1-2 sig digits."""
    if value < 0:
        raise ValueError("approximation expects a non-negative value")
    out = VariantSet()
    for sig in (2, 1):
        rounded = round_sig(value, sig) if value != 0 else Fraction(0)
        text = decimal_str(rounded, grouped=True)
        out.add(f"about {text}", f"approx{sig}")
        out.add(f"approximately {text}", f"approx{sig}")
        if rounded >= value:
            out.add(f"almost {text}", f"approx{sig}")
    return out


def expand_date(d: ParsedDate) -> VariantSet:
    """Render every standard reordering/abbreviation the fields permit."""
    out = VariantSet()
    y, m, day = d.year, d.month, d.day
    if m is not None:
        month = MONTH_NAMES[m - 1]
        abbr = MONTH_ABBREVS[m - 1]
    if m is not None and day is not None and y is not None:
        od = ordinal_digits(day)
        out.add(f"{month} {day}, {y}", "date-mdy")
        out.add(f"{day} {month} {y}", "date-dmy")
        out.add(f"{day} {month}, {y}", "date-dmy")
        out.add(f"{abbr} {day}, {y}", "date-mdy-abbrev")
        out.add(f"{abbr}. {day}, {y}", "date-mdy-abbrev")
        out.add(f"{day} {abbr} {y}", "date-dmy-abbrev")
        out.add(f"{day} {abbr}., {y}", "date-dmy-abbrev")
        out.add(f"{month} {od}, {y}", "date-ordinal")
        out.add(f"{od} {month} {y}", "date-ordinal")
        out.add(f"{abbr} {od}, {y}", "date-ordinal-abbrev")
    if m is not None and day is not None and y is None:
        od = ordinal_digits(day)
        out.add(f"{month} {day}", "date-md")
        out.add(f"{abbr} {day}", "date-md-abbrev")
        out.add(f"{month} {od}", "date-md-ordinal")
        out.add(f"{abbr} {od}", "date-md-ordinal")
        out.add(f"{day} {month}", "date-dm")
    if m is not None and y is not None:
        out.add(f"{month} {y}", "date-my")
        out.add(f"{abbr} {y}", "date-my-abbrev")
    if m is not None and y is None and day is None:
        out.add(month, "date-m")
        out.add(abbr, "date-m-abbrev")
    if y is not None:
        out.add(str(y), "date-y")
    return out


def _unit_forms(value: Fraction, unit: str) -> tuple[str, str]:
    """(long form, abbreviated form) with plural applied by value."""
    long_unit, abbr = patterns.MEASURE_UNITS.get(unit, (unit, unit))
    if value != 1:
        if long_unit == "foot":
            long_unit = "feet"
        elif long_unit == "inch":
            long_unit = "inches"
        elif not long_unit.endswith("s") and long_unit not in ("mph", "MHz", "GHz"):
            long_unit += "s"
    return long_unit, abbr


def _words_or_none(value: Fraction) -> Optional[str]:
    if value.denominator == 1 and 0 <= value.numerator <= MAX_WORDABLE:
        return number_to_words(value.numerator)
    return None


def _duration_unit(value: Fraction, unit: str, abbreviated: bool) -> str:
    base = _DURATION_ABBREV[unit] if abbreviated else unit
    return base if value == 1 else base + "s"


def _expand_duration(out: VariantSet, p: ParsedNumber):
    v = p.value
    unit = p.unit
    text = decimal_str(v)
    out.add(f"{text} {_duration_unit(v, unit, False)}", "duration")
    out.add(f"{text} {_duration_unit(v, unit, True)}", "duration-abbrev")
    words = _words_or_none(v)
    if words:
        out.add(f"{words} {_duration_unit(v, unit, False)}", "duration-words")
        out.add(f"{words} {_duration_unit(v, unit, True)}", "duration-words")
    if unit in ("minute", "second") and v.denominator == 1:
        bigger = "hour" if unit == "minute" else "minute"
        big, small = divmod(v.numerator, 60)
        if big > 0 and small == 0:
            btext = str(big)
            out.add(f"{btext} {_duration_unit(Fraction(big), bigger, False)}", "duration-convert")
            out.add(f"{btext} {_duration_unit(Fraction(big), bigger, True)}", "duration-convert")
            bwords = _words_or_none(Fraction(big))
            if bwords:
                out.add(f"{bwords} {_duration_unit(Fraction(big), bigger, False)}", "duration-convert")
        elif big > 0:
            out.add(
                f"{big} {_duration_unit(Fraction(big), bigger, False)} and "
                f"{small} {_duration_unit(Fraction(small), unit, False)}",
                "duration-convert",
            )
            out.add(
                f"{big} {_duration_unit(Fraction(big), bigger, True)} and "
                f"{small} {_duration_unit(Fraction(small), unit, True)}",
                "duration-convert",
            )
            out.add(
                f"{big}{_duration_unit(Fraction(big), bigger, True)} and "
                f"{small} {_duration_unit(Fraction(small), unit, True)}",
                "duration-convert",
            )
    if unit == "hour" and (v * 60).denominator == 1:
        minutes = (v * 60).numerator
        out.add(f"{minutes} minutes", "duration-convert")
        out.add(f"{minutes} mins", "duration-convert")


def _expand_money(out: VariantSet, p: ParsedNumber):
    v = p.value
    symbol = p.currency
    word = patterns.CURRENCY_WORDS.get(symbol, "units")
    grouped = decimal_str(v, grouped=True)
    out.add(f"{symbol}{grouped}", "money-digits")
    out.add(f"{grouped} {word}", "money-word")
    mag_name = None
    for name in ("trillion", "billion", "million", "thousand"):
        k = v / patterns.MAGNITUDES[name]
        if k >= 1 and (k * 100).denominator == 1:
            mag_name, mag_value = name, k
            break
    if mag_name is not None:
        ks = decimal_str(mag_value)
        out.add(f"{symbol}{ks} {mag_name}", "money-magnitude")
        out.add(f"{ks} {mag_name} {word}", "money-magnitude")
        kwords = _words_or_none(mag_value)
        if kwords:
            out.add(f"{kwords} {mag_name} {word}", "money-words")
    vwords = _words_or_none(v)
    if vwords:
        out.add(f"{vwords} {word}", "money-words")
    for prefix in ("about", "approximately", "almost"):
        rounded = round_sig(v, 2)
        if prefix == "almost" and rounded < v:
            continue
        if mag_name is not None:
            rk = rounded / patterns.MAGNITUDES[mag_name]
            if (rk * 100).denominator == 1:
                out.add(f"{prefix} {symbol}{decimal_str(rk)} {mag_name}", "money-approx")
                continue
        out.add(f"{prefix} {symbol}{decimal_str(rounded, grouped=True)}", "money-approx")


def _expand_measured(out: VariantSet, p: ParsedNumber):
    v = p.value
    long_unit, abbr = _unit_forms(v, p.unit)
    text = decimal_str(v)
    out.add(f"{text} {long_unit}", "measured")
    if abbr != long_unit:
        out.add(f"{text} {abbr}", "measured-abbrev")
    words = _words_or_none(v)
    if words:
        out.add(f"{words} {long_unit}", "measured-words")


def expand_number(p: ParsedNumber) -> VariantSet:
    """Per-kind rendering of alternate forms; all conversions are exact."""
    out = VariantSet()
    v = p.value
    if p.kind == "cardinal":
        out.add(decimal_str(v, grouped=True), "cardinal-digits")
        out.add(decimal_str(v), "cardinal-digits")
        words = _words_or_none(v)
        if words:
            out.add(words, "cardinal-words")
        out.extend(approximate_forms(v))
    elif p.kind == "ordinal":
        if v.denominator == 1 and 0 <= v.numerator <= MAX_WORDABLE:
            n = v.numerator
            out.add(ordinal_digits(n), "ordinal-digits")
            out.add(ordinal_words(n), "ordinal-words")
            out.add(str(n), "ordinal-bare")
    elif p.kind == "percent":
        text = decimal_str(v)
        out.add(f"{text}%", "percent-symbol")
        out.add(f"{text} percent", "percent-word")
        words = _words_or_none(v)
        if words:
            out.add(f"{words} percent", "percent-words")
    elif p.kind == "money":
        _expand_money(out, p)
    elif p.kind == "duration":
        _expand_duration(out, p)
    elif p.kind == "measured":
        _expand_measured(out, p)
    return out


def rule_expand(
    answer: str,
    entity_type: EntityType,
    cap: int = DEFAULT_VARIANT_CAP,
) -> VariantSet:
    """Deterministic expansion for one gold answer.

    Numeric entity types route through the parser and per-kind expanders;
    everything else returns just the answer (alias/paraphrase knowledge is
    the LLM route's job). Unparseable numeric answers degrade the same way.
    """
    out = VariantSet.seeded(answer)
    if entity_type not in NUMERIC_TYPES:
        return out
    parsed = parse_numeric(answer)
    if parsed is None:
        return out
    variants = expand_date(parsed) if isinstance(parsed, ParsedDate) else expand_number(parsed)
    for text, gen in zip(variants.entries, variants.provenance):
        if len(out) >= cap:
            break
        out.add(text, gen)
    return out
