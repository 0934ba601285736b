"""Exception types shared across the toolkit."""


class BehindCamera(ValueError):
    """Point has non-positive depth in the camera frame; not visible."""


class NonPositiveDepth(ValueError):
    """Unprojection requires a strictly positive depth."""


class DimensionMismatch(ValueError):
    """Vector/matrix dimensions do not match the consumer's expectation."""


# adamw uses this name for the same condition
ShapeMismatch = DimensionMismatch


class NonFiniteGradient(FloatingPointError):
    """Gradient contains NaN or infinity."""


class NonFiniteLoss(FloatingPointError):
    """Training loss became NaN/inf; carries the iteration index."""

    def __init__(self, iteration, message=None):
        self.iteration = iteration
        super().__init__(message or f"non-finite loss at iteration {iteration}")


class InsufficientSamples(ValueError):
    """Fewer samples than requested output dimensions."""


class DegenerateData(ValueError):
    """Data rank too low for the requested decomposition."""


class EmptyInput(ValueError):
    """Operation requires at least one element."""


class DuplicateImageId(ValueError):
    """Image ids must be distinct."""


class GraphSaturated(RuntimeError):
    """No non-adjacent pairs remain to corrupt."""


class BandUnderflow(RuntimeError):
    """A mining band has fewer pairs than requested; carries the band name."""

    def __init__(self, band, message=None):
        self.band = band
        super().__init__(message or f"not enough pairs in band '{band}'")


class MissingFeatures(KeyError):
    """Batch references an image id without a feature map."""


class DegenerateDescriptor(ValueError):
    """Descriptor norm too small to normalize."""


class EmptyDataset(ValueError):
    """Dataset holds no observations."""


class FocusModeUnavailable(ValueError):
    """Focus sampling requires ground-truth 3-D points, none present."""


class IndivisibleDimension(ValueError):
    """PQ sub-block count must divide the descriptor dimension."""


class KTooLarge(ValueError):
    """Requested more retrievals than the index holds."""


class InfeasibleConfig(ValueError):
    """Scene configuration cannot be realized."""


class IdMismatch(ValueError):
    """Result ids and ground-truth ids do not align."""


class ParseError(ValueError):
    """Malformed text input; carries the line number."""

    def __init__(self, line_no, message):
        self.line_no = line_no
        super().__init__(f"line {line_no}: {message}")


class MissingIntrinsics(ValueError):
    """Pose id has no matching intrinsics entry."""


class NonUnitQuaternion(ValueError):
    """Quaternion norm deviates from 1 beyond the hard tolerance."""


class BadMagic(ValueError):
    """File does not start with the expected magic bytes."""


class UnsupportedVersion(ValueError):
    """File format version not understood by this build."""
