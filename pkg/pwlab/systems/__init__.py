"""Stable LTI systems: frequency responses, impulse responses, reference outputs."""

from pwlab.systems.lti import LtiSystem, impulse_response, reference_output

__all__ = ["LtiSystem", "impulse_response", "reference_output"]
