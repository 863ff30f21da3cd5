"""scikit-learn style front end."""

from __future__ import annotations

from joblib import Parallel, delayed
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .pipeline import zigzag_of
from .validation import check_choice, check_dimension, check_samples, check_temporal_hypergraph, check_window
from .zigzag import to_time_axis


class ZigzagPersistence(TransformerMixin, BaseEstimator):
    """Sliding-window zigzag barcodes of temporal hypergraphs.

    Each sample is cut into windows of width ``window_size`` moved by
    ``shift``, every window becomes the associated simplicial complex of its
    active edges, adjacent complexes are joined by their union (or
    intersection), and the zigzag barcode of the resulting sequence is
    returned.

    Parameters
    ----------
    window_size : float
        Width of each window.
    shift : float, optional
        Distance between window starts, ``0 < shift <= window_size``. Defaults
        to ``window_size``.
    homology_dimension : int, default=1
        Highest homology dimension reported (0 to 3).
    mode : {"union", "intersection"}, default="union"
    axis : {"index", "time"}, default="index"
        Report bars on snapshot indices or on window mid-times.
    t0, tf : float, optional
        Override the time domain of each sample.
    event_mode : {"span", "points"}, default="span"
        How event-row samples are turned into edge intervals.
    merge_gap : float, default=0.0
    n_jobs : int, optional
        Samples processed in parallel by joblib.

    Attributes
    ----------
    shift_ : float
        Resolved shift.
    """

    def __init__(self, window_size=1.0, shift=None, homology_dimension=1, mode="union", axis="index",
                 t0=None, tf=None, event_mode="span", merge_gap=0.0, n_jobs=None):
        self.window_size = window_size
        self.shift = shift
        self.homology_dimension = homology_dimension
        self.mode = mode
        self.axis = axis
        self.t0 = t0
        self.tf = tf
        self.event_mode = event_mode
        self.merge_gap = merge_gap
        self.n_jobs = n_jobs

    def _validate_params(self):
        _, self.shift_ = check_window(self.window_size, self.shift)
        check_dimension(self.homology_dimension)
        check_choice("mode", self.mode, ("union", "intersection"))
        check_choice("axis", self.axis, ("index", "time"))
        check_choice("event_mode", self.event_mode, ("span", "points"))
        if self.merge_gap < 0:
            raise ValueError("merge_gap must be non-negative")

    def fit(self, X, y=None):
        """Validate parameters and samples; nothing is learned."""
        self._validate_params()
        for x in check_samples(X):
            check_temporal_hypergraph(x, self.event_mode, self.merge_gap)
        return self

    def _one(self, x):
        thg = check_temporal_hypergraph(x, self.event_mode, self.merge_gap)
        _, filtration, barcode = zigzag_of(thg, float(self.window_size), self.shift_, self.homology_dimension,
                                           self.mode, self.t0, self.tf)
        return to_time_axis(barcode, filtration) if self.axis == "time" else barcode

    def transform(self, X):
        """One :class:`~thg_zigzag.zigzag.Barcode` per sample."""
        check_is_fitted(self, "shift_")
        samples = check_samples(X)
        if self.n_jobs in (None, 1):
            return [self._one(x) for x in samples]
        return Parallel(n_jobs=self.n_jobs)(delayed(self._one)(x) for x in samples)
