"""
core.response - Réponse d'une commande, sérialisable en JSON
"""

from dataclasses import dataclass, field
import json


@dataclass(frozen=True)
class Response:
    """
    Response - Résultat d'une commande
    ---
    {"status": "ok", "command": ..., "payload": {...}}
    ou {"status": "error", "command": ..., "error": {"code": ..., "message": ..., "details": {...}}}
    """

    status: str
    command: str | None = None
    payload: dict | None = None
    error: dict = field(default_factory=dict)

    @classmethod
    def ok(cls, command: str, payload: dict) -> "Response":
        return cls("ok", command, payload)

    @classmethod
    def failure(cls, command: str | None, code: str, message: str, details: dict | None = None) -> "Response":
        error = {"code": code, "message": message}
        if details:
            error["details"] = details
        return cls("error", command, None, error)

    @property
    def is_ok(self) -> bool:
        return self.status == "ok"

    def to_json(self) -> dict:
        body: dict = {"status": self.status, "command": self.command}
        if self.is_ok:
            body["payload"] = self.payload
        else:
            body["error"] = self.error
        return body

    def dumps(self, indent: int | None = None) -> str:
        return json.dumps(self.to_json(), indent=indent, ensure_ascii=False)

    @classmethod
    def loads(cls, text: str) -> "Response":
        data = json.loads(text)
        return cls(data["status"], data.get("command"), data.get("payload"), data.get("error", {}))
