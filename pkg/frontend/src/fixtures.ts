// Pre-signed demo transactions for desk-scale use (there is deliberately
// no key handling in the browser). They verify only on a node started with
// the committed demo keypair: data/demo_node.key in the repo root.

import type { TransactionData } from "./types.js";

export const HEALTHY_READING: TransactionData = {
  "donor": {
    "age": 41,
    "blood_type": "O+",
    "donor_id": "D-1001",
    "name": "Alex Mercer"
  },
  "location": {
    "label": "ORD cargo bay 3, courier handoff",
    "latitude": 41.978611,
    "longitude": -87.904722,
    "recorded_at": "2024-03-12T14:05:00.000000Z"
  },
  "metrics": {
    "age": 41.0,
    "al": 0.0,
    "ane": "no",
    "appet": "good",
    "ba": "notpresent",
    "bgr": 104.0,
    "bp": 80.0,
    "bu": 29.0,
    "cad": "no",
    "dm": "no",
    "hemo": 15.8,
    "htn": "no",
    "pc": "normal",
    "pcc": "notpresent",
    "pcv": 47.0,
    "pe": "no",
    "pot": 4.4,
    "rbc": "normal",
    "rc": 5.4,
    "sc": 0.9,
    "sg": 1.025,
    "sod": 142.0,
    "su": 0.0,
    "wc": 7400.0
  },
  "recipient": {
    "age": 55,
    "blood_type": "O+",
    "name": "Jordan Pike",
    "recipient_id": "R-2417"
  },
  "red_flag": false,
  "signature": "1923aa0e2cc448f1effa7f114411704a7d1371ac8bfd2d89ebdd50b1aaedbd19f6d47b48b60b3f6540bf4e2b6c2aabafd52e23a1203d868ea8b3a0d1194b3809",
  "submitter_pubkey": "b7a2ec4ec7961bba5094dc549183c53c240583cf7e6114114a7585d40b486cdf",
  "tx_id": "000000a1000000a1000000a1000000a1000000a1000000a1000000a1000000a1",
  "viability": null
};

export const DISEASED_READING: TransactionData = {
  "donor": {
    "age": 63,
    "blood_type": "A-",
    "donor_id": "D-1002",
    "name": "Casey Bloom"
  },
  "location": {
    "label": "DEN refrigerated van, leg 2",
    "latitude": 39.861667,
    "longitude": -104.673056,
    "recorded_at": "2024-03-12T17:40:00.000000Z"
  },
  "metrics": {
    "age": 63.0,
    "al": 4.0,
    "ane": "yes",
    "appet": "poor",
    "ba": "notpresent",
    "bgr": 208.0,
    "bp": 90.0,
    "bu": 109.0,
    "cad": "no",
    "dm": "yes",
    "hemo": 8.9,
    "htn": "yes",
    "pc": "abnormal",
    "pcc": "present",
    "pcv": 27.0,
    "pe": "yes",
    "pot": 5.7,
    "rbc": "abnormal",
    "rc": 3.1,
    "sc": 6.1,
    "sg": 1.01,
    "sod": 131.0,
    "su": 2.0,
    "wc": 11200.0
  },
  "recipient": {
    "age": 48,
    "blood_type": "A-",
    "name": "Riley Nash",
    "recipient_id": "R-3090"
  },
  "red_flag": false,
  "signature": "5c14ed7ac5958dacc73b7edd6f527a3a629da7a64767334a3980d8f3d3af445b526e985b7435bd951ee601fab01fec6ba24754b6a43209afb9e99e1bdcf80d03",
  "submitter_pubkey": "b7a2ec4ec7961bba5094dc549183c53c240583cf7e6114114a7585d40b486cdf",
  "tx_id": "000000b1000000b1000000b1000000b1000000b1000000b1000000b1000000b1",
  "viability": null
};
