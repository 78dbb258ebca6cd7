"""Exception hierarchy shared by all loaders and pipeline stages.

``DataValidationError`` covers everything a malformed input file or an
inconsistent argument can trigger; callers that need to distinguish cases
catch the concrete subclasses.  ``EmptyScope`` is a control-flow signal
(the event cannot be scored), not a file-format problem.
"""


class EgosentError(Exception):
    """Base class for all errors raised by this package."""


class DataValidationError(EgosentError):
    """A file or argument violates a documented contract."""


# -- lexicon / ontology ------------------------------------------------------

class MalformedRow(DataValidationError):
    """Wrong column count or an unparsable field."""


class SentimentOutOfRange(DataValidationError):
    """ANP sentiment outside [-2, 2]."""


class DuplicateAnp(DataValidationError):
    """The same adjective+noun pair appears twice."""


class DuplicateNoun(DataValidationError):
    """A noun is assigned to more than one ontology cluster."""


class BadPolarity(DataValidationError):
    """Polarity label outside {-1, 0, +1}."""


# -- concept scores ----------------------------------------------------------

class UnknownAnpId(DataValidationError):
    """Concept id not covered by the lexicon vocabulary."""


class ProbabilityOutOfRange(DataValidationError):
    """Concept probability outside [0, 1]."""


class LexiconMismatch(DataValidationError):
    """Score file was produced against a different lexicon."""


# -- event boundaries --------------------------------------------------------

class NonContiguous(DataValidationError):
    """Event spans overlap, leave gaps, or do not cover the stream."""


class UnknownImageId(DataValidationError):
    """Boundary row references an image absent from the stream."""


class BadLabel(DataValidationError):
    """Ground-truth label outside {-1, 0, +1}."""


# -- similarity matrix -------------------------------------------------------

class AsymmetricInput(DataValidationError):
    """The same noun pair is listed twice with different values."""


class ValueOutOfRange(DataValidationError):
    """Similarity outside [0, 1]."""


# -- scoring -----------------------------------------------------------------

class EmptyScope(EgosentError):
    """No concept falls inside the scoring scope; the event is unscorable."""


# -- evaluation --------------------------------------------------------------

class IdMismatch(DataValidationError):
    """Prediction and truth id sets differ."""


class EmptyMatrix(DataValidationError):
    """Metric requested on a confusion matrix with zero total."""


class ClassTooSmall(DataValidationError):
    """A class has fewer members than the number of folds."""


class OverlapDetected(DataValidationError):
    """Held-out events overlap the training ids."""
