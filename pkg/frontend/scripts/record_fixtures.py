"""Record real server exchanges for the client test suite.

Replays the scripted sessions the vitest tests perform against the
actual HTTP app and stores every request/response pair, so client tests
assert against genuine server JSON without running Python.

Run from the repo root:  python3 frontend/scripts/record_fixtures.py
"""

import json
import pathlib

from fastapi.testclient import TestClient

from spg.server import create_app

OUT = pathlib.Path(__file__).resolve().parent.parent / "test" / "fixtures"

EXAMPLE2 = {
    "directed": True,
    "n": 6,
    "labels": ["s", "a", "b", "c", "d", "t"],
    "edges": [[0, 1, 5], [1, 3, 1], [1, 2, 2], [3, 4, 5], [3, 5, 6],
              [2, 4, 1], [4, 5, 1]],
    "s": 0,
    "t": 5,
}

PATH3 = {
    "directed": False,
    "n": 3,
    "edges": [[0, 1, 1], [1, 2, 1]],
    "s": 0,
    "t": 2,
    "labels": ["s", "m", "t"],
}


def main() -> None:
    client = TestClient(create_app())
    transcript = []

    def call(method, url, body=None):
        if method == "GET":
            res = client.get(url)
        elif method == "DELETE":
            res = client.delete(url)
        else:
            res = client.post(url, json=body)
        entry = {
            "method": method,
            "url": url,
            "body": body,
            "status": res.status_code,
            "response": res.json() if res.status_code != 204 else None,
        }
        transcript.append(entry)
        return entry["response"]

    # equilibrium for the summary panel
    call("POST", "/api/solve", EXAMPLE2)
    # human plays A along the equilibrium line
    sess = call("POST", "/api/sessions",
                {"graph": EXAMPLE2, "mode": "engine", "human_side": "A"})
    sid = sess["session"]
    body = call("POST", f"/api/sessions/{sid}/moves", {"next": 1})
    call("POST", f"/api/sessions/{sid}/moves", {"next": 4})
    assert body is not None

    # a human-vs-human path graph where the back-move is illegal (rule R2)
    call("POST", "/api/solve", PATH3)
    sess2 = call("POST", "/api/sessions",
                 {"graph": PATH3, "mode": "human", "human_side": "A"})
    sid2 = sess2["session"]
    call("POST", f"/api/sessions/{sid2}/moves", {"next": 1})
    call("POST", f"/api/sessions/{sid2}/moves", {"next": 0})  # 400 R2

    generic = []
    for e in transcript:
        url = e["url"].replace(sid, "{sid1}").replace(sid2, "{sid2}")
        text = json.dumps(e["response"]).replace(sid, "{sid1}").replace(sid2, "{sid2}")
        generic.append({**e, "url": url, "response": json.loads(text)})

    OUT.mkdir(parents=True, exist_ok=True)
    (OUT / "transcript.json").write_text(json.dumps(generic, indent=1) + "\n")
    print(f"wrote {OUT / 'transcript.json'} with {len(generic)} exchanges")


if __name__ == "__main__":
    main()
