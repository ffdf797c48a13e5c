"""Check findings and batch reports shared by the verifier and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field


@dataclass(frozen=True)
class Finding:
    """One named check with its outcome; failures carry a witness."""

    name: str
    passed: bool
    witness: str | None = None

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tail = f"  [{self.witness}]" if self.witness else ""
        return f"[{mark}] {self.name}{tail}"


def ok(name: str, info: str | None = None) -> Finding:
    return Finding(name, True, info)


def fail(name: str, witness) -> Finding:
    return Finding(name, False, str(witness))


def check(name: str, passed: bool, witness=None) -> Finding:
    if passed:
        return Finding(name, True)
    return Finding(name, False, None if witness is None else str(witness))


@dataclass
class Report:
    """Outcome of one CLI command: echo, findings, derived exit status."""

    command: str
    findings: list[Finding] = field(default_factory=list)

    def add(self, finding: Finding) -> None:
        self.findings.append(finding)

    def extend(self, findings) -> None:
        self.findings.extend(findings)

    def info(self, name: str, value) -> None:
        self.findings.append(Finding(name, True, str(value)))

    @property
    def ok(self) -> bool:
        return all(f.passed for f in self.findings)

    @property
    def exit_status(self) -> int:
        return 0 if self.ok else 1

    def render(self) -> str:
        lines = [f"# {self.command}"]
        lines += [f.line() for f in self.findings]
        lines.append(f"# {'ok' if self.ok else 'FAILED'}")
        return "\n".join(lines)

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "findings": [
                {"name": f.name, "pass": f.passed}
                | ({"witness": f.witness} if f.witness is not None else {})
                for f in self.findings
            ],
            "ok": self.ok,
        }
        return json.dumps(payload, indent=2, sort_keys=False)
