"""Verification pipelines behind the command-line interface."""

from app.verification.service import VerificationService, verification_service

__all__ = ["VerificationService", "verification_service"]
