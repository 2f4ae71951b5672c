"""Exception hierarchy shared by every module in the package."""


class GroupListError(Exception):
    """Base class for all errors raised by grouplist."""


class EmptyCorpus(GroupListError, ValueError):
    pass


class MalformedDocument(GroupListError, ValueError):
    def __init__(self, line, reason="blank line"):
        self.line = line
        super().__init__(f"line {line}: {reason}")


class DuplicateDocId(GroupListError, ValueError):
    def __init__(self, doc_id, line=None):
        self.doc_id = doc_id
        self.line = line
        where = f" (line {line})" if line is not None else ""
        super().__init__(f"duplicate document id {doc_id}{where}")


class InvalidThreshold(GroupListError, ValueError):
    pass


class InternalInconsistency(GroupListError, RuntimeError):
    pass


class RankOrderViolation(GroupListError, ValueError):
    pass


class MissingCodes(GroupListError, RuntimeError):
    pass


class IndexWriteError(GroupListError, OSError):
    pass


class IndexFormatError(GroupListError, ValueError):
    pass


class IndexVersionError(IndexFormatError):
    pass


class InvalidQuery(GroupListError, ValueError):
    pass


class InvalidParams(GroupListError, ValueError):
    pass


class InsufficientTerms(GroupListError, ValueError):
    pass


class CorrectnessFailure(GroupListError, AssertionError):
    """Two engines disagreed on a query result."""

    def __init__(self, query, detail=""):
        self.query = query
        msg = f"result mismatch for {query}"
        if detail:
            msg += f": {detail}"
        super().__init__(msg)
