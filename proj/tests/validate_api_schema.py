# SPDX-License-Identifier: MIT
#
# Licensed under the MIT License
"""Validates every API response printed by api_dump against the schema."""

import json
import subprocess
import sys

import jsonschema

DEFINITION = {
    "health": "healthResponse",
    "parse": "parseResponse",
    "synthesize": "synthesizeResponse",
    "simulate": "simulateResponse",
    "cost": "costResponse",
}


def main() -> int:
    dump_binary, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as handle:
        schema = json.load(handle)
    jsonschema.Draft202012Validator.check_schema(schema)
    root = jsonschema.Draft202012Validator(schema)

    def validator_for(definition):
        return jsonschema.Draft202012Validator({"$ref": "#/$defs/" + definition, "$defs": schema["$defs"]})

    output = subprocess.run([dump_binary], check=True, capture_output=True, text=True).stdout
    failures = 0
    count = 0
    for line in output.splitlines():
        record = json.loads(line)
        endpoint, status, body = record["endpoint"], record["status"], record["body"]
        definition = DEFINITION[endpoint] if status == 200 else "errorResponse"
        errors = list(validator_for(definition).iter_errors(body)) + list(root.iter_errors(body))
        if status == 200 and endpoint == "synthesize":
            if len(body["circuit"]["gates"]) != body["stats"]["gates"]:
                errors.append("gate list length differs from stats.gates")
            if len(body["circuit"]["lines"]) != body["stats"]["lines"]:
                errors.append("line list length differs from stats.lines")
        if status not in (200, 400, 404, 413):
            errors.append(f"unexpected status {status}")
        for error in errors:
            failures += 1
            print(f"FAIL {endpoint} ({status}): {getattr(error, 'message', error)}")
        count += 1
    print(f"validated {count} responses, {failures} problems")
    return 1 if failures or count == 0 else 0


if __name__ == "__main__":
    sys.exit(main())
