"""Special functions required by the detection statistics."""

from .gaussian import q, q_inv, normal_pdf, as_probability
