"""Regenerate the engine fixtures used by the frontend tests.

Drives the real serve-mode API in-process so the recorded responses are
exactly what the UI would receive.  Run from the repository root:

    python3 frontend/scripts/make_fixtures.py
"""

import json
import tempfile
import threading
import urllib.request
from pathlib import Path

from ecluster.server import make_server

OUT = Path(__file__).resolve().parent.parent / "test" / "fixtures" / "pentagon.json"


def scrub(doc):
    if isinstance(doc, dict):
        return {k: ("SESSION" if k == "id" else scrub(v)) for k, v in doc.items()}
    if isinstance(doc, list):
        return [scrub(x) for x in doc]
    return doc


def main():
    with tempfile.TemporaryDirectory() as tmp:
        httpd = make_server(port=0, data_dir=tmp)
        port = httpd.server_address[1]
        threading.Thread(target=httpd.serve_forever, daemon=True).start()
        base = f"http://127.0.0.1:{port}"

        def call(method, path, body=None):
            data = json.dumps(body).encode() if body is not None else None
            req = urllib.request.Request(base + path, data=data, method=method)
            if data:
                req.add_header("Content-Type", "application/json")
            with urllib.request.urlopen(req) as resp:
                return json.loads(resp.read())

        created = call("POST", "/session", {"kind": "polygon", "n": 2})
        sid = created["id"]
        fixture = {
            "created": created,
            "embeddingFan": call("GET", f"/session/{sid}/embedding"),
            "mutated": call("POST", f"/session/{sid}/mutate", {"at": "1-3"}),
            "embeddingAfter": call("GET", f"/session/{sid}/embedding"),
            "undone": call("POST", f"/session/{sid}/undo"),
            "embeddingRestored": call("GET", f"/session/{sid}/embedding"),
        }
        httpd.shutdown()
        httpd.server_close()
    OUT.write_text(json.dumps(scrub(fixture), indent=1, sort_keys=True) + "\n")
    print(f"wrote {OUT}")


if __name__ == "__main__":
    main()
