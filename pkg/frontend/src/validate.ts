// Client-side validation mirroring the ledger's record invariants, so a
// bad form never even reaches the node.

export interface FieldError {
  field: string;
  message: string;
}

export const BLOOD_TYPES = ["A+", "A-", "B+", "B-", "AB+", "AB-", "O+", "O-"];
export const SG_LEVELS = [1.005, 1.01, 1.015, 1.02, 1.025];

export const NUMERIC_METRICS = [
  "age", "bp", "sg", "al", "su", "bgr", "bu", "sc",
  "sod", "pot", "hemo", "pcv", "wc", "rc",
];

export const CATEGORICAL_LEVELS: Record<string, string[]> = {
  rbc: ["normal", "abnormal"],
  pc: ["normal", "abnormal"],
  pcc: ["notpresent", "present"],
  ba: ["notpresent", "present"],
  htn: ["yes", "no"],
  dm: ["yes", "no"],
  cad: ["yes", "no"],
  appet: ["good", "poor"],
  pe: ["yes", "no"],
  ane: ["yes", "no"],
};

export const METRIC_FIELDS = [...NUMERIC_METRICS, ...Object.keys(CATEGORICAL_LEVELS)];

const TIMESTAMP_RE = /^\d{4}-\d{2}-\d{2}T\d{2}:\d{2}:\d{2}\.\d{6}Z$/;
const HEX_RE = /^[0-9a-f]+$/;

function isRecord(value: unknown): value is Record<string, unknown> {
  return typeof value === "object" && value !== null && !Array.isArray(value);
}

function checkParty(
  errors: FieldError[],
  prefix: string,
  party: unknown,
  idField: string,
): void {
  if (!isRecord(party)) {
    errors.push({ field: prefix, message: "expected an object" });
    return;
  }
  if (typeof party[idField] !== "string" || party[idField] === "") {
    errors.push({ field: `${prefix}.${idField}`, message: "required" });
  }
  if (typeof party.name !== "string" || party.name === "") {
    errors.push({ field: `${prefix}.name`, message: "required" });
  }
  const age = party.age;
  if (typeof age !== "number" || !Number.isInteger(age) || age < 0 || age > 130) {
    errors.push({ field: `${prefix}.age`, message: "must be an integer between 0 and 130" });
  }
  if (typeof party.blood_type !== "string" || !BLOOD_TYPES.includes(party.blood_type)) {
    errors.push({ field: `${prefix}.blood_type`, message: `must be one of ${BLOOD_TYPES.join(" ")}` });
  }
}

function checkLocation(errors: FieldError[], location: unknown): void {
  if (!isRecord(location)) {
    errors.push({ field: "location", message: "expected an object" });
    return;
  }
  const { latitude, longitude, recorded_at: recordedAt, label } = location;
  if (typeof latitude !== "number" || latitude < -90 || latitude > 90) {
    errors.push({ field: "location.latitude", message: "must be within [-90, 90]" });
  }
  if (typeof longitude !== "number" || longitude < -180 || longitude > 180) {
    errors.push({ field: "location.longitude", message: "must be within [-180, 180]" });
  }
  if (typeof recordedAt !== "string" || !TIMESTAMP_RE.test(recordedAt)) {
    errors.push({
      field: "location.recorded_at",
      message: "must look like 2024-03-12T14:05:00.000000Z",
    });
  }
  if (typeof label !== "string") {
    errors.push({ field: "location.label", message: "required" });
  }
}

function checkMetrics(errors: FieldError[], metrics: unknown): void {
  if (!isRecord(metrics)) {
    errors.push({ field: "metrics", message: "expected an object" });
    return;
  }
  for (const key of Object.keys(metrics)) {
    if (!METRIC_FIELDS.includes(key)) {
      errors.push({ field: `metrics.${key}`, message: "unknown attribute" });
    }
  }
  for (const name of NUMERIC_METRICS) {
    const value = metrics[name];
    if (value === null || value === undefined) continue;
    if (typeof value !== "number" || Number.isNaN(value) || value < 0) {
      errors.push({ field: `metrics.${name}`, message: "must be a non-negative number" });
    } else if (name === "sg" && !SG_LEVELS.includes(value)) {
      errors.push({ field: "metrics.sg", message: `must be one of ${SG_LEVELS.join(", ")}` });
    }
  }
  for (const [name, levels] of Object.entries(CATEGORICAL_LEVELS)) {
    const value = metrics[name];
    if (value === null || value === undefined) continue;
    if (typeof value !== "string" || !levels.includes(value)) {
      errors.push({ field: `metrics.${name}`, message: `must be one of ${levels.join(", ")}` });
    }
  }
}

function checkHex(errors: FieldError[], field: string, value: unknown, length: number): void {
  if (typeof value !== "string" || value.length !== length || !HEX_RE.test(value)) {
    errors.push({ field, message: `must be ${length} lowercase hex characters` });
  }
}

/** Validate a parsed signed-transaction object; [] means submittable. */
export function validateTransactionForm(tx: unknown): FieldError[] {
  const errors: FieldError[] = [];
  if (!isRecord(tx)) {
    return [{ field: "transaction", message: "expected a JSON object" }];
  }
  checkParty(errors, "donor", tx.donor, "donor_id");
  checkParty(errors, "recipient", tx.recipient, "recipient_id");
  checkLocation(errors, tx.location);
  checkMetrics(errors, tx.metrics);
  const viability = tx.viability;
  if (viability !== null && viability !== undefined) {
    if (typeof viability !== "number" || viability < 0 || viability > 1) {
      errors.push({ field: "viability", message: "must be within [0, 1] or null" });
    }
  }
  if (typeof tx.red_flag !== "boolean") {
    errors.push({ field: "red_flag", message: "must be a boolean" });
  }
  checkHex(errors, "tx_id", tx.tx_id, 64);
  checkHex(errors, "submitter_pubkey", tx.submitter_pubkey, 64);
  checkHex(errors, "signature", tx.signature, 128);
  return errors;
}
