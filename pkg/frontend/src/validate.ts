/** Client-side zip check mirroring the API's syntax rule: 5 alphanumerics. */
export function isValidZip(zip: string): boolean {
  return /^[0-9a-zA-Z]{5}$/.test(zip);
}
