import java.util.HashMap;
import java.util.Map;

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
        pairs.put(i, i * i);
    }
    return pairs;
}
