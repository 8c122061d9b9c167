"""Drive the HTTP service end to end with nothing but the stdlib.

Starts `ctxsim serve` as a subprocess, waits for it to come up, walks
the API (instances, ranking, similarity breakdown, context upload), and
shuts it down.  This is the same surface the browser frontend consumes.
"""

import json
import subprocess
import sys
import time
import urllib.error
import urllib.request

BASE = "http://127.0.0.1:8799"


def get(path: str):
    with urllib.request.urlopen(BASE + path) as response:
        return json.load(response)


def post(path: str, payload: dict):
    request = urllib.request.Request(
        BASE + path, data=json.dumps(payload).encode(),
        headers={"Content-Type": "application/json"})
    with urllib.request.urlopen(request) as response:
        return json.load(response)


server = subprocess.Popen(
    [sys.executable, "-m", "ctxsim.cli", "serve", "--bind", "127.0.0.1:8799"],
    stdout=subprocess.DEVNULL, stderr=subprocess.DEVNULL)
try:
    for _ in range(50):
        try:
            get("/api/contexts")
            break
        except urllib.error.URLError:
            time.sleep(0.2)
    else:
        raise RuntimeError("service did not come up")

    instances = get("/api/instances")["instances"]
    print(f"repository holds {len(instances)} instances")

    ranking = get("/api/rank?query=WateringCan_1&context=usage")
    top = ranking["groups"][0]
    print(f"best replacements for WateringCan_1 (usage): "
          f"{' '.join(top['ids'])} at {top['score']}")

    score = get("/api/similarity?a=FruitBowl_30&b=IceBucket_28&context=usage")
    print(f"sim(FruitBowl_30, IceBucket_28) = {score['value']}, terms:")
    for term in score["terms"]:
        print(f"  {term['entity']:<24} {term['op']:<6} -> {term['score']}")

    uploaded = post("/api/contexts", {
        "name": "tasks_only",
        "entries": [{"path": {"start": "Object", "relations": []},
                     "rels": [{"name": "hasCharacterizingTask", "op": "inter"}]}]})
    print(f"uploaded context {uploaded['name']!r}")
    reranked = get("/api/rank?query=WateringCan_1&context=tasks_only")
    print(f"re-ranked top group: {' '.join(reranked['groups'][0]['ids'])} "
          f"at {reranked['groups'][0]['score']}")
finally:
    server.terminate()
    server.wait(timeout=5)
