"""Surface-pattern vocabulary shared by the rule typer and the parsers.

Regexes here are anchored and case-insensitive: they decide whether a whole
answer string looks like one of the numeric families. Finer-grained value
extraction lives in surface.py and reuses the same vocabularies so the two
stay in agreement.
"""

from __future__ import annotations

import re

from .numwords import ONES, ORDINAL_ONES, TENS

MONTHS = [
    "january", "february", "march", "april", "may", "june",
    "july", "august", "september", "october", "november", "december",
]
MONTH_ABBREVS = [
    "jan", "feb", "mar", "apr", "may", "jun",
    "jul", "aug", "sep", "oct", "nov", "dec",
]
# Extra abbreviated spellings seen in the wild, mapped to month numbers.
MONTH_NUMBER = {name: i + 1 for i, name in enumerate(MONTHS)}
MONTH_NUMBER.update({abbr: i + 1 for i, abbr in enumerate(MONTH_ABBREVS)})
MONTH_NUMBER["sept"] = 9

TIME_UNITS = {
    "second": "second", "seconds": "second", "sec": "second", "secs": "second",
    "minute": "minute", "minutes": "minute", "min": "minute", "mins": "minute",
    "hour": "hour", "hours": "hour", "hr": "hour", "hrs": "hour",
}
SECONDS_PER = {"second": 1, "minute": 60, "hour": 3600}

# unit token -> (canonical long singular, canonical abbreviation)
MEASURE_UNITS = {
    "mile": ("mile", "mi"), "miles": ("mile", "mi"), "mi": ("mile", "mi"),
    "kilometre": ("kilometre", "km"), "kilometres": ("kilometre", "km"),
    "kilometer": ("kilometer", "km"), "kilometers": ("kilometer", "km"),
    "km": ("kilometer", "km"),
    "metre": ("metre", "m"), "metres": ("metre", "m"),
    "meter": ("meter", "m"), "meters": ("meter", "m"), "m": ("meter", "m"),
    "centimetre": ("centimetre", "cm"), "centimetres": ("centimetre", "cm"),
    "centimeter": ("centimeter", "cm"), "centimeters": ("centimeter", "cm"),
    "cm": ("centimeter", "cm"), "mm": ("millimeter", "mm"),
    "millimeter": ("millimeter", "mm"), "millimeters": ("millimeter", "mm"),
    "foot": ("foot", "ft"), "feet": ("foot", "ft"), "ft": ("foot", "ft"),
    "inch": ("inch", "in"), "inches": ("inch", "in"), "in": ("inch", "in"),
    "yard": ("yard", "yd"), "yards": ("yard", "yd"), "yd": ("yard", "yd"),
    "acre": ("acre", "acre"), "acres": ("acre", "acre"),
    "kilogram": ("kilogram", "kg"), "kilograms": ("kilogram", "kg"),
    "kg": ("kilogram", "kg"), "gram": ("gram", "g"), "grams": ("gram", "g"),
    "ton": ("ton", "ton"), "tons": ("ton", "ton"),
    "tonne": ("tonne", "tonne"), "tonnes": ("tonne", "tonne"),
    "ounce": ("ounce", "oz"), "ounces": ("ounce", "oz"), "oz": ("ounce", "oz"),
    "lb": ("pound", "lb"), "lbs": ("pound", "lb"),
    "litre": ("litre", "l"), "litres": ("litre", "l"),
    "liter": ("liter", "l"), "liters": ("liter", "l"),
    "gallon": ("gallon", "gal"), "gallons": ("gallon", "gal"),
    "mph": ("mph", "mph"), "mhz": ("MHz", "MHz"), "ghz": ("GHz", "GHz"),
    "degrees": ("degrees", "degrees"), "degree": ("degree", "degree"),
}

CURRENCY_WORDS = {
    "$": "dollars", "£": "pounds", "€": "euros", "¥": "yen",
}
CURRENCY_SYMBOLS = {word: sym for sym, word in CURRENCY_WORDS.items()}
CURRENCY_WORD_TOKENS = {
    "dollar": "$", "dollars": "$", "buck": "$", "bucks": "$", "cent": "$", "cents": "$",
    "pound": "£", "pounds": "£", "pence": "£",
    "euro": "€", "euros": "€", "yen": "¥",
}

MAGNITUDES = {"thousand": 10**3, "million": 10**6, "billion": 10**9, "trillion": 10**12}


def _alternation(words: list[str]) -> str:
    return "|".join(sorted(map(re.escape, words), key=len, reverse=True))


_NUMBER_WORD_TOKENS = ONES + TENS + ["hundred", "thousand"]
WORDNUM = rf"(?:{_alternation(_NUMBER_WORD_TOKENS)})(?:[\s-](?:{_alternation(_NUMBER_WORD_TOKENS)}))*"

_ORDINAL_TENS = [t[:-1] + "ieth" for t in TENS]
_ORDINAL_WORDS = ORDINAL_ONES + _ORDINAL_TENS
WORD_ORDINAL = (
    rf"(?:(?:{_alternation(TENS)})-(?:{_alternation(ORDINAL_ONES[:10])})"
    rf"|{_alternation(_ORDINAL_WORDS)})"
)

NUM = r"\d+(?:,\d{3})*(?:\.\d+)?"
APPROX = r"(?:about|approximately|almost|around|over|approx\.?|nearly|up\s+to|more\s+than)"
_MONTH = rf"(?:{_alternation(MONTHS)}|(?:{_alternation(MONTH_ABBREVS + ['sept'])})\.?)"
_DAY = r"\d{1,2}(?:st|nd|rd|th)?"
_YEAR = r"\d{3,4}"

PERCENT_RE = re.compile(
    rf"^(?:{APPROX}\s+)?(?:the\s+top\s+|top\s+)?(?:{NUM}|{WORDNUM})\s*(?:%|percents?)$",
    re.IGNORECASE,
)

MONEY_RE = re.compile(
    rf"^(?:{APPROX}\s+)?(?:[$£€¥]\s?{NUM}(?:\s*(?:{_alternation(list(MAGNITUDES))}))?"
    rf"|(?:{NUM}|{WORDNUM})\s*(?:(?:{_alternation(list(MAGNITUDES))})\s+)?"
    rf"(?:{_alternation(list(CURRENCY_WORD_TOKENS))}))$",
    re.IGNORECASE,
)

_DURATION_PART = rf"(?:{NUM}(?:-{NUM})?|{WORDNUM})\s*(?:{_alternation(list(TIME_UNITS))})\b"
TIME_RE = re.compile(
    rf"^(?:{APPROX}\s+)?(?:{_DURATION_PART}(?:\s+(?:and\s+)?{_DURATION_PART})*(?:\s+(?:long|later|before|after(?:\s+\w+)?))?"
    rf"|\d{{1,2}}:\d{{2}}"
    rf"|(?:\d{{1,2}}(?::\d{{2}})?|{WORDNUM})\s*(?:am|pm|a\.m\.|p\.m\.)"
    rf"|(?:\d{{1,2}}|{WORDNUM})\s+o'?clock(?:\s+\w+)*"
    rf"|(?:\d{{1,2}}|{WORDNUM})\s+at\s+night)$",
    re.IGNORECASE,
)

DATE_RE = re.compile(
    rf"^(?:{_MONTH}\s+{_DAY},?\s+{_YEAR}"
    rf"|{_DAY}\s+{_MONTH},?\s+{_YEAR}"
    rf"|{_MONTH}(?:,|\s+of)?\s+{_YEAR}"
    rf"|{_MONTH}\s+{_DAY}"
    rf"|{_DAY}\s+{_MONTH}"
    rf"|[12]\d{{3}}"
    rf"|(?:in\s+)?(?:early|late|mid)?[\s-]*\d{{3,4}}0s"
    rf"|\d{{4}}\s*[-–—]\s*\d{{1,4}})$",
    re.IGNORECASE,
)

ORDINAL_RE = re.compile(
    rf"^(?:\d{{1,4}}(?:st|nd|rd|th)|{WORD_ORDINAL})(?:\s+place)?$",
    re.IGNORECASE,
)

_MEASURE_PART = rf"(?:{NUM}|{WORDNUM})[\s-]?(?:{_alternation(list(MEASURE_UNITS))}|°\s?[cf])\.?"
QUANTITY_RE = re.compile(
    rf"^(?:{APPROX}\s+)?{_MEASURE_PART}(?:\s+{_MEASURE_PART})?"
    rf"(?:\s+(?:long|tall|wide|high|deep|away|fast|per\s+\w+))?$",
    re.IGNORECASE,
)

CARDINAL_RE = re.compile(
    rf"^(?:{APPROX}\s+)?(?:{NUM}|{WORDNUM})$",
    re.IGNORECASE,
)
