import java.util.HashMap;
import java.util.Map;

class RangePairs {
    static int squareOf(int k) {
        return k * k;
    }

    static Map<Integer, Integer> rangePairs(int n) {
        int k = n;
        if (k < 0) {
            k = 0;
        }
        if (k > 6) {
            k = 6;
        }
        Map<Integer, Integer> pairs = new HashMap<Integer, Integer>();
        for (int i = 0; i < k; i++) {
            pairs.put(i, squareOf(i));
        }
        return pairs;
    }
}
