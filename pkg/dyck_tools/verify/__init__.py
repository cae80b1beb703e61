from .report import VerificationReport, CheckResult, VERIFIED, REFUTED
