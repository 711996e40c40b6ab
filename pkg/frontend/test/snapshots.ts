// API responses snapshotted verbatim from a live node driven by the
// committed demo fixtures (two readings mined into block 1, a follow-up
// red-flag reading in block 2). The offline-render tests rebuild the whole
// console from these alone.

import type { AlertsPayload, ChainPayload, HealthPayload } from "../src/types.js";

export const CHAIN_SNAPSHOT: ChainPayload = {
  "blocks": [
    {
      "index": 0,
      "previous_hash": "0000000000000000000000000000000000000000000000000000000000000000",
      "proof": 0,
      "timestamp": "2024-01-01T00:00:00.000000Z",
      "transactions": []
    },
    {
      "index": 1,
      "previous_hash": "a6718b57d313288ddac859f33dbe59bcec54f0d3a04a52442fe1b8fa25121844",
      "proof": 6,
      "timestamp": "2026-08-09T17:04:05.869317Z",
      "transactions": [
        {
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
          "signature": "362a9921a312f8ce46dbcb87736bdf59a4389392b6a056e51c339577faab346403798d122918278dda05ff534bb8328748b0f1ddb445cd5f7d733bf79e85e709",
          "submitter_pubkey": "b7a2ec4ec7961bba5094dc549183c53c240583cf7e6114114a7585d40b486cdf",
          "tx_id": "000000a1000000a1000000a1000000a1000000a1000000a1000000a1000000a1",
          "viability": 1.0
        },
        {
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
          "red_flag": true,
          "signature": "6afbce46886be026689b4520ae7e89b54f434f76cd8aa19d0b4b2bc2406e947e32c99312c221fd07f7e89bd9c1d132e338d361af661344b5ffd35e581a983909",
          "submitter_pubkey": "b7a2ec4ec7961bba5094dc549183c53c240583cf7e6114114a7585d40b486cdf",
          "tx_id": "000000b1000000b1000000b1000000b1000000b1000000b1000000b1000000b1",
          "viability": 0.0
        }
      ]
    },
    {
      "index": 2,
      "previous_hash": "ca9389c5d86c1867eb040ca399a4bf3a583210ac688b5b4a6fbf2c7976e4e790",
      "proof": 17,
      "timestamp": "2026-08-09T17:04:05.960698Z",
      "transactions": [
        {
          "donor": {
            "age": 63,
            "blood_type": "A-",
            "donor_id": "D-1002",
            "name": "Casey Bloom"
          },
          "location": {
            "label": "DEN airfield, leg 3",
            "latitude": 39.861667,
            "longitude": -104.673056,
            "recorded_at": "2024-03-12T19:10:00.000000Z"
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
            "hemo": 8.4,
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
          "red_flag": true,
          "signature": "a0f50c8c2793e0396c7b6b046d29468c8210912178c50dbc5b8031292374eb855fce6f18e140e174d15979805cccd8438e23aaa16e32fe6c119c49999f82160d",
          "submitter_pubkey": "b7a2ec4ec7961bba5094dc549183c53c240583cf7e6114114a7585d40b486cdf",
          "tx_id": "000000c1000000c1000000c1000000c1000000c1000000c1000000c1000000c1",
          "viability": 0.0
        }
      ]
    }
  ],
  "difficulty": 1,
  "length": 3
};

export const ALERTS_SNAPSHOT: AlertsPayload = {
  "alerts": [
    {
      "block_index": 1,
      "location": {
        "label": "DEN refrigerated van, leg 2",
        "latitude": 39.861667,
        "longitude": -104.673056,
        "recorded_at": "2024-03-12T17:40:00.000000Z"
      },
      "recorded_at": "2024-03-12T17:40:00.000000Z",
      "tx_id": "000000b1000000b1000000b1000000b1000000b1000000b1000000b1000000b1",
      "viability": 0.0
    },
    {
      "block_index": 2,
      "location": {
        "label": "DEN airfield, leg 3",
        "latitude": 39.861667,
        "longitude": -104.673056,
        "recorded_at": "2024-03-12T19:10:00.000000Z"
      },
      "recorded_at": "2024-03-12T19:10:00.000000Z",
      "tx_id": "000000c1000000c1000000c1000000c1000000c1000000c1000000c1000000c1",
      "viability": 0.0
    }
  ]
};

export const HEALTH_SNAPSHOT: HealthPayload = {
  "chain_length": 3,
  "mempool": 0,
  "node": "127.0.0.1:7430",
  "peers": 0
};
