/** Fixed feature sets selectable as correlation-matrix axes. */

export const FEATURE_GROUPS: Record<string, readonly string[]> = {
  race: ["white_share", "black_share", "asian_share", "other_share", "hispanic_share"],
  tenure: ["renter_share", "owner_share"],
  income: ["low_income_share", "moderate_income_share", "high_income_share"],
  "year built": ["pre1960_share", "b1960_1979_share", "b1980_1999_share", "b2000_plus_share"],
};

export const GROUP_NAMES = Object.keys(FEATURE_GROUPS);
