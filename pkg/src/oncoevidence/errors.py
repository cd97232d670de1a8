"""Exception hierarchy shared across the package."""


class OncoEvidenceError(Exception):
    """Base class for all package-specific errors."""


class MalformedXml(OncoEvidenceError):
    """Input is not well-formed PubmedArticleSet XML."""


class MissingPmid(OncoEvidenceError):
    """A PubmedArticle element carries no PMID."""


class UnknownLabel(OncoEvidenceError):
    """A label string is outside its closed schema."""

    def __init__(self, label: str, line_no: int | None = None):
        self.label = label
        self.line_no = line_no
        where = f" (line {line_no})" if line_no is not None else ""
        super().__init__(f"unknown label {label!r}{where}")


class DuplicateKey(OncoEvidenceError):
    """A dataset key occurs more than once."""

    def __init__(self, key, line_no: int | None = None):
        self.key = key
        self.line_no = line_no
        where = f" (line {line_no})" if line_no is not None else ""
        super().__init__(f"duplicate key {key!r}{where}")


class EmptyTermList(OncoEvidenceError):
    """A query term group is empty."""


class DimensionMismatch(OncoEvidenceError):
    """Vector or matrix dimensions do not line up."""


class HeaderMismatch(OncoEvidenceError):
    """A word-vector file disagrees with its own header."""


class EmptySentence(OncoEvidenceError):
    """A sequence operation received zero tokens."""


class EmptyCorpus(OncoEvidenceError):
    """No training material left after pruning."""


class SingleClassDataset(OncoEvidenceError):
    """Classifier training needs at least two distinct classes."""


class AllFieldsEmpty(OncoEvidenceError):
    """No in-vocabulary token in any input field."""


class TooFewDocuments(OncoEvidenceError):
    """Not enough distinct documents to build the requested folds."""


class HttpError(OncoEvidenceError):
    """An HTTP request failed with a non-retryable status."""

    def __init__(self, status: int, message: str = ""):
        self.status = status
        super().__init__(f"HTTP {status}" + (f": {message}" if message else ""))


class RateLimited(OncoEvidenceError):
    """The server kept answering 429 after all retries."""


class MalformedResponse(OncoEvidenceError):
    """The server response could not be parsed."""
