//! Parabolic module (stub).
