import java.util.ArrayList;
import java.util.List;

class OddsList {
    static boolean isOdd(int k) {
        return k % 2 != 0;
    }

    static List<Integer> oddsList(int n) {
        List<Integer> found = new ArrayList<Integer>();
        for (int i = 0; i < n; i++) {
            if (isOdd(i)) {
                found.add(i);
            }
        }
        return found;
    }
}
