#!/usr/bin/env python3
# Copyright 2026 The Solgen Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#      http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""EVM execution backend for solgen, built on py-evm.

Reads one JSON request on stdin:
  {"bytecode": hex, "abi": [...], "calls": [{"function", "args", "value"}],
   "mode": "fresh" | "sequential"}
and writes one JSON response on stdout:
  {"deploy_status": "ok" | "fail",
   "results": [{"status": "success" | "revert", "revert_reason"?: str,
                "logs": [{"event": str, "args": [str]}], "output": hex}]}

In "fresh" mode every call runs against the state right after deployment.
"""

import json
import sys

from eth import constants
from eth.chains.base import MiningChain
from eth.tools.builder.chain import api
from eth.vm.forks import CancunVM
from eth_abi import decode, encode
from eth_keys import keys
from eth_utils import keccak, to_wei
from eth._utils.address import generate_contract_address

GAS_LIMIT = 1_000_000_000
SENDER_KEY = keys.PrivateKey(b"\x01" * 32)
SENDER = SENDER_KEY.public_key.to_canonical_address()

PANIC_SELECTOR = bytes.fromhex("4e487b71")
ERROR_SELECTOR = bytes.fromhex("08c379a0")


def canonical_type(param):
    t = param["type"]
    if t.startswith("tuple"):
        inner = ",".join(canonical_type(c) for c in param["components"])
        return "(" + inner + ")" + t[len("tuple"):]
    return t


def signature(entry):
    return entry["name"] + "(" + ",".join(
        canonical_type(p) for p in entry.get("inputs", [])) + ")"


def render(value):
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, bytes):
        return "0x" + value.hex()
    if isinstance(value, (list, tuple)):
        return "[" + ",".join(render(v) for v in value) + "]"
    return str(value)


def parse_arg(abi_type, raw):
    if abi_type.startswith("uint") or abi_type.startswith("int"):
        return int(raw)
    if abi_type == "bool":
        return raw in (True, "true", "1", 1)
    if abi_type == "address":
        return bytes.fromhex(str(raw).removeprefix("0x").rjust(40, "0"))
    if abi_type.startswith("bytes"):
        return bytes.fromhex(str(raw).removeprefix("0x"))
    return raw


def revert_reason(output):
    if not output:
        return "Transaction reverted without a reason string"
    if output[:4] == ERROR_SELECTOR:
        try:
            return decode(["string"], output[4:])[0]
        except Exception:
            pass
    if output[:4] == PANIC_SELECTOR and len(output) >= 36:
        return "Panic(0x%02x)" % int.from_bytes(output[4:36], "big")
    return "0x" + output.hex()


def decode_logs(entries, events):
    logs = []
    for _address, topics, data in entries:
        topic0 = topics[0].to_bytes(32, "big") if topics else None
        event = events.get(topic0)
        if event is None:
            logs.append({"event": "anonymous",
                         "args": [hex(t) for t in topics] + ["0x" + data.hex()]})
            continue
        inputs = event.get("inputs", [])
        plain = [canonical_type(p) for p in inputs if not p.get("indexed")]
        values = list(decode(plain, data)) if plain else []
        indexed = [t for t in topics[1:]]
        args = []
        for p in inputs:
            if p.get("indexed"):
                args.append(render(indexed.pop(0)))
            else:
                args.append(render(values.pop(0)))
        logs.append({"event": event["name"], "args": args})
    return logs


def make_chain():
    genesis_params = {
        "coinbase": constants.ZERO_ADDRESS,
        "difficulty": 0,
        "gas_limit": GAS_LIMIT * 4,
        "timestamp": 1_700_000_000,
        "extra_data": b"",
        "nonce": b"\x00" * 8,
    }
    genesis_state = {
        SENDER: {"balance": to_wei(1_000_000, "ether"), "nonce": 0,
                 "code": b"", "storage": {}},
    }
    builder = api.build(
        MiningChain,
        api.fork_at(CancunVM, 0),
        api.disable_pow_check(),
        api.genesis(params=genesis_params, state=genesis_state),
    )
    return builder


def send(vm, nonce, to, data, value):
    state = vm.state
    base_fee = vm.get_header().base_fee_per_gas
    tx = vm.create_unsigned_transaction(
        nonce=nonce, gas_price=base_fee, gas=GAS_LIMIT, to=to,
        value=value, data=data).as_signed_transaction(SENDER_KEY)
    return state.apply_transaction(tx)


def run(request):
    abi = request.get("abi", [])
    events = {}
    functions = {}
    for entry in abi:
        if entry.get("type") == "event":
            events[keccak(text=signature(entry))] = entry
        elif entry.get("type") == "function":
            functions[entry["name"]] = entry

    chain = make_chain()
    vm = chain.get_vm()
    state = vm.state
    bytecode = bytes.fromhex(request["bytecode"].removeprefix("0x"))
    nonce = state.get_nonce(SENDER)
    address = generate_contract_address(SENDER, nonce)
    deploy = send(vm, nonce, b"", bytecode, 0)
    if deploy.is_error:
        return {"deploy_status": "fail", "results": [],
                "deploy_error": revert_reason(deploy.output)
                if not isinstance(deploy.error, Exception) or deploy.output
                else str(deploy.error)}

    sequential = request.get("mode", "fresh") == "sequential"
    results = []
    snapshot = state.snapshot()
    for call in request.get("calls", []):
        entry = functions[call["function"]]
        types = [canonical_type(p) for p in entry.get("inputs", [])]
        args = [parse_arg(t, a) for t, a in zip(types, call.get("args", []))]
        selector = keccak(text=signature(entry))[:4]
        data = selector + (encode(types, args) if types else b"")
        comp = send(vm, state.get_nonce(SENDER), address, data,
                    int(call.get("value", 0)))
        result = {"status": "revert" if comp.is_error else "success",
                  "logs": [] if comp.is_error
                  else decode_logs(comp.get_log_entries(), events),
                  "output": "0x" + comp.output.hex()}
        if comp.is_error:
            if comp.output or comp.error.__class__.__name__ == "Revert":
                result["revert_reason"] = revert_reason(comp.output)
            else:
                result["revert_reason"] = comp.error.__class__.__name__
        results.append(result)
        if not sequential:
            state.revert(snapshot)
            snapshot = state.snapshot()
    return {"deploy_status": "ok", "results": results}


def main():
    request = json.load(sys.stdin)
    json.dump(run(request), sys.stdout)
    sys.stdout.write("\n")


if __name__ == "__main__":
    main()
