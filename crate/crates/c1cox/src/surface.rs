//! K*-surface pipeline.
