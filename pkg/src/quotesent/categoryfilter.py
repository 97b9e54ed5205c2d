"""Subject-domain category definitions and the alert-word exclusion test.

Category-defining vocabulary ("crisis", "disaster", ...) describes what a
news item is about, not how anyone feels about its target. Words that are
both sentiment vocabulary and category definitions can be excluded from
scoring; the test here is pure surface-form membership and never looks at
polarity.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

from .errors import InputFormatError

FILTER_MODES = ("tagged", "global")


@dataclass(frozen=True)
class CategoryDefs:
    """Immutable map from category id to its lowercase word/phrase forms."""

    categories: dict[str, frozenset[str]] = field(default_factory=dict)

    @classmethod
    def empty(cls) -> "CategoryDefs":
        return cls({})

    def __len__(self) -> int:
        return len(self.categories)

    def forms(self, category: str) -> frozenset[str]:
        return self.categories.get(category, frozenset())


def load_categories(path: str | Path) -> CategoryDefs:
    """Parse `category_id: form1, form2, ...` lines; `#` comments allowed.

    A category id appearing on two lines is an error (sections do not merge).
    """
    path = Path(path)
    if not path.exists():
        raise InputFormatError(str(path), None, "category file not found")
    categories: dict[str, frozenset[str]] = {}
    with open(path, encoding="utf-8") as f:
        for line_no, raw in enumerate(f, start=1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            cat_id, sep, rest = line.partition(":")
            cat_id = cat_id.strip()
            if not sep or not cat_id:
                raise InputFormatError(
                    str(path), line_no, f"expected `category_id: form, ...`, got {line!r}"
                )
            forms = frozenset(" ".join(p.split()).lower() for p in rest.split(",") if p.strip())
            if not forms:
                raise InputFormatError(str(path), line_no, f"category {cat_id!r} has no forms")
            if cat_id in categories:
                raise InputFormatError(str(path), line_no, f"duplicate category {cat_id!r}")
            categories[cat_id] = forms
    return CategoryDefs(categories)


def is_category_word(
    form: str,
    quote_categories: frozenset[str] | set[str],
    defs: CategoryDefs,
    mode: str = "tagged",
) -> bool:
    """Should `form` be discarded as a category word for this quote?

    tagged mode consults only the categories the quote is tagged with
    (unknown ids contribute nothing); global mode consults every category.
    """
    if mode == "global":
        return any(form in forms for forms in defs.categories.values())
    if mode == "tagged":
        return any(form in defs.forms(cat) for cat in quote_categories)
    raise ValueError(f"unknown filter mode {mode!r}, expected one of {FILTER_MODES}")
