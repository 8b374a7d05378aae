"""
bartiler 例外類別
所有錯誤皆繼承 BarTilerError，同時保留對應的內建例外型別，方便呼叫端以 ValueError 等捕捉
"""


class BarTilerError(Exception):
    """bartiler 所有例外的基底類別"""


# 多項式與級數運算
class NonUnitConstantTerm(BarTilerError, ValueError):
    """分母（或被反轉的多項式）常數項不是 1"""


class TruncationMismatch(BarTilerError, ValueError):
    """兩個截斷級數的階數不同"""


class OddTermSurvived(BarTilerError, ArithmeticError):
    """p(x)·p(−x) 出現奇次項，代表算術有錯"""


class NegativeExponent(BarTilerError, ValueError):
    """代換後出現負次方"""


class NotDivisible(BarTilerError, ArithmeticError):
    """多項式無法整除"""


# 組合物件
class OutOfRange(BarTilerError, ValueError):
    """參數超出定義範圍"""


class NotOddComposition(BarTilerError, ValueError):
    """組合中含有非正奇數的部分"""


class SumExceedsN(BarTilerError, ValueError):
    """組合總和超過 N"""


# 鋪磚窮舉
class CapacityExceeded(BarTilerError, RuntimeError):
    """狀態數或鋪法數量超過設定上限"""


class PreconditionViolated(BarTilerError, ValueError):
    """不符合定理前提"""


class RangeViolation(BarTilerError, ValueError):
    """窄矩形公式要求 k ≤ m < 2k"""


# 對稱函數
class MalformedPartition(BarTilerError, ValueError):
    """不是合法的分割（或斜形不是 ribbon）"""


class OddTarget(BarTilerError, ValueError):
    """ASC 分割的大小必須是偶數"""


class SizeMismatch(BarTilerError, ValueError):
    """|λ| 與 |μ| 不相等"""


class NotASC(BarTilerError, ValueError):
    """分割不是 ASC 分割"""


# 設定檔
class ConfigError(BarTilerError, ValueError):
    """config.ini 內容不合法"""
